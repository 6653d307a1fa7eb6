//! Near-miss bundles for falsifiability testing.
//!
//! A verifier that has never rejected anything proves nothing. Each helper
//! here damages the bundle in a way that is invisible to some checks and
//! fatal to exactly one, and the test suites pin which is which:
//!
//! * [`scale_fields`] with (2, 4) keeps the dbar constraint (both sides
//!   scale by 4) but breaks the equation, whose terms scale unevenly.
//! * [`with_v_plus_zbar`] breaks the dbar constraint itself.
//! * [`with_v_plus_one`] keeps the dbar constraint (constants are
//!   annihilated by the derivative) but breaks the equation through the
//!   undifferentiated `3 U_z V` coupling.
//! * [`with_delta_plus_one`] breaks the denominator split.

use mnv_algebra::{RationalFn, SparsePoly, Var};

use crate::bundle::SolutionBundle;

/// Multiplies `u` and `v` by integer factors, leaving everything else.
pub fn scale_fields(b: &SolutionBundle, u_factor: i64, v_factor: i64) -> SolutionBundle {
    let scale = |f: &RationalFn, k: i64| f * &RationalFn::from_poly(SparsePoly::integer(k));
    SolutionBundle {
        u: scale(&b.u, u_factor),
        v: scale(&b.v, v_factor),
        q: b.q.clone(),
        gamma: b.gamma.clone(),
        delta: b.delta.clone(),
    }
}

/// Adds `z̄ = x - iy` to the potential; `dbar(z̄) = 1`, so the constraint
/// residual becomes exactly 1.
pub fn with_v_plus_zbar(b: &SolutionBundle) -> SolutionBundle {
    let z_bar = &SparsePoly::var(Var::X) - &(&SparsePoly::i() * &SparsePoly::var(Var::Y));
    SolutionBundle {
        v: &b.v + &RationalFn::from_poly(z_bar),
        ..b.clone()
    }
}

/// Adds 1 to the potential.
pub fn with_v_plus_one(b: &SolutionBundle) -> SolutionBundle {
    SolutionBundle {
        v: &b.v + &RationalFn::one(),
        ..b.clone()
    }
}

/// Shifts `delta` by 1 without touching `q`.
pub fn with_delta_plus_one(b: &SolutionBundle) -> SolutionBundle {
    SolutionBundle {
        delta: &b.delta + &SparsePoly::one(),
        ..b.clone()
    }
}
