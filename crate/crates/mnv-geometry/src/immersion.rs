//! Immersions of the parameter plane into three-space and their first
//! fundamental forms, all in exact arithmetic.

use mnv_algebra::{DiffVar, FactoredRational, GaussRational, RationalFn, SparsePoly, Var};

/// A surface `(x, y) -> (c1, c2, c3)` in three-space, with the time slice
/// selected by `s`. Components are exact rational functions; polynomial
/// immersions simply have denominator 1.
#[derive(Clone, Debug)]
pub struct Immersion {
    pub c1: RationalFn,
    pub c2: RationalFn,
    pub c3: RationalFn,
}

impl Immersion {
    pub fn components(&self) -> [&RationalFn; 3] {
        [&self.c1, &self.c2, &self.c3]
    }
}

/// First fundamental form coefficients `E = ⟨r_x, r_x⟩`, `F = ⟨r_x, r_y⟩`,
/// `G = ⟨r_y, r_y⟩`.
#[derive(Clone, Debug)]
pub struct FundamentalForm {
    pub e: RationalFn,
    pub f: RationalFn,
    pub g: RationalFn,
}

/// The Enneper surface, translated along the second coordinate axis so the
/// whole family drifts linearly in time:
///
/// ```text
/// c1 = y (y²/3 - x² - 1)
/// c2 = x (1 + y² - x²/3) - s
/// c3 = x² - y²
/// ```
///
/// The translation offset is `(0, -s, 0)`: it is what places the image of
/// the parameter origin at distance |s| from the inversion center, so the
/// inverted family stays bounded away from its singular moment except at
/// s = 0.
pub fn enneper_immersion() -> Immersion {
    let x = SparsePoly::var(Var::X);
    let y = SparsePoly::var(Var::Y);
    let s = SparsePoly::var(Var::S);
    let one = SparsePoly::one();
    let third = GaussRational::from_ratio(1, 3);

    let c1 = &y * &(&y.pow(2).mul_scalar(&third) - &(&x.pow(2) + &one));
    let c2 = &(&x * &(&(&one + &y.pow(2)) - &x.pow(2).mul_scalar(&third))) - &s;
    let c3 = &x.pow(2) - &y.pow(2);

    Immersion {
        c1: RationalFn::from_poly(c1),
        c2: RationalFn::from_poly(c2),
        c3: RationalFn::from_poly(c3),
    }
}

/// Inversion of three-space centered at the origin, `u -> -u/|u|²`,
/// applied componentwise and exactly.
///
/// Panics if `|u|²` is identically zero, which no actual surface triggers.
pub fn invert_immersion(u: &Immersion) -> Immersion {
    let norm_sq = &(&(&u.c1 * &u.c1) + &(&u.c2 * &u.c2)) + &(&u.c3 * &u.c3);
    let map = |c: &RationalFn| {
        (-c)
            .checked_div(&norm_sq)
            .expect("|u|^2 must not vanish identically")
    };
    Immersion {
        c1: map(&u.c1),
        c2: map(&u.c2),
        c3: map(&u.c3),
    }
}

/// Rewrites the three components over one shared denominator and returns
/// them in factored form, so downstream derivatives track denominator
/// powers instead of expanding them.
///
/// Normalization can leave the three denominators differing by a rational
/// scale (their contents differ); that case is folded into the numerators.
/// Genuinely different denominators fall back to the product, which is
/// exact but larger.
pub(crate) fn over_common_den(r: &Immersion) -> [FactoredRational; 3] {
    let parts = r.components();
    let shared = parts[0].den().clone();

    let mut out = Vec::with_capacity(3);
    for c in parts {
        let ratio_to_shared = match (c.den().leading_term(), shared.leading_term()) {
            (Some((m_c, a_c)), Some((m_s, a_s))) if m_c == m_s => a_s / a_c,
            _ => GaussRational::zero(),
        };
        if !ratio_to_shared.is_zero() && c.den().mul_scalar(&ratio_to_shared) == shared {
            // c = num/den = (num * ratio) / shared
            let lifted = c.num().mul_scalar(&ratio_to_shared);
            out.push(
                FactoredRational::new(lifted, vec![(shared.clone(), 1)])
                    .expect("shared denominator is nonzero"),
            );
        } else {
            out.push(FactoredRational::from_rational(c));
        }
    }
    out.try_into().expect("exactly three components")
}

pub(crate) fn dot(a: &[FactoredRational; 3], b: &[FactoredRational; 3]) -> FactoredRational {
    a[0].mul(&b[0]).add(&a[1].mul(&b[1])).add(&a[2].mul(&b[2]))
}

pub(crate) fn cross(a: &[FactoredRational; 3], b: &[FactoredRational; 3]) -> [FactoredRational; 3] {
    [
        a[1].mul(&b[2]).sub(&a[2].mul(&b[1])),
        a[2].mul(&b[0]).sub(&a[0].mul(&b[2])),
        a[0].mul(&b[1]).sub(&a[1].mul(&b[0])),
    ]
}

pub(crate) fn diff_each(c: &[FactoredRational; 3], v: DiffVar) -> [FactoredRational; 3] {
    [c[0].diff(v), c[1].diff(v), c[2].diff(v)]
}

/// Exact first fundamental form of an immersion.
pub fn fundamental_form(r: &Immersion) -> FundamentalForm {
    let c = over_common_den(r);
    let rx = diff_each(&c, DiffVar::X);
    let ry = diff_each(&c, DiffVar::Y);
    FundamentalForm {
        e: dot(&rx, &rx).to_rational(),
        f: dot(&rx, &ry).to_rational(),
        g: dot(&ry, &ry).to_rational(),
    }
}
