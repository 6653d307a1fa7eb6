//! Geometric origin of the solution: a family of translated Enneper
//! surfaces, turned inside out by an inversion of three-space, whose mean
//! curvature reproduces the solution field exactly.
//!
//! The chain of facts certified here:
//!
//! 1. the translated Enneper immersion is harmonic and conformal, with
//!    conformal factor `(1 + x² + y²)²`;
//! 2. the inversion `T(u) = -u/|u|²` maps it to another conformal
//!    immersion whose components share the single denominator `q`, and
//!    `9 |u|² = q`, so the image is defined away from one space-time point;
//! 3. for the inverted surface, `16 U² g³ = ⟨Δr, w⟩²` holds identically in
//!    `x`, `y` and `s`, which says `U² = (H √g / 2)²` for its mean
//!    curvature `H`; the leftover sign is pinned by exact sampling.
//!
//! Square roots are never materialized: every certified statement is
//! arranged as a polynomial identity, and the sign probe only compares
//! signs of exact rational values.

pub mod error;
pub mod immersion;
pub mod potential;

pub use error::GeometryError;
pub use immersion::{enneper_immersion, fundamental_form, invert_immersion, FundamentalForm, Immersion};
pub use potential::{
    verify_conformal, verify_potential_matches_u, weierstrass_potential_sq, ConformalCertificates,
    GeometryReport,
};
