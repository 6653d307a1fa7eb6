//! Construction of the solution fields as exact rational functions.
//!
//! Everything is assembled from five closed forms in the real variables
//! `x`, `y`, `s`:
//!
//! ```text
//! gamma = i (x² - y²)
//! delta = y (1 + x² - y²/3) - i [ x (1 + y² - x²/3) - s ]
//! q     = (x²+y²)³ + 3(x⁴+y⁴) + 18x²y² + 9(x²+y²) + 9s² + (6x³ - 18xy² - 18x) s
//! U     = -3 ((x²+y²+3)(x²-y²) - 6xs) / q
//! V     = B²/P² + 2U/(1+x²+y²) + 2i z̄ B / (P (1+x²+y²))
//! ```
//!
//! with `z = x + iy`, `P = gamma·conj(gamma) + delta·conj(delta)`, and
//! `B = z (conj(gamma) - gamma) - delta z² - conj(delta)`. The split
//! `q = 9P` is not assumed anywhere in the construction; it is proved
//! separately as a certificate, which is why `q` is built from its own
//! closed form above.

use mnv_algebra::{FactoredRational, GaussRational, RationalFn, SparsePoly, Var};

/// The solution fields, all exact.
///
/// `u` is the real-valued solution itself, `v` the auxiliary potential,
/// `q` the common denominator polynomial, and `gamma`, `delta` the complex
/// pair whose squared moduli split `q` as `9(|gamma|² + |delta|²)`.
#[derive(Clone, Debug)]
pub struct SolutionBundle {
    pub u: RationalFn,
    pub q: SparsePoly,
    pub v: RationalFn,
    pub gamma: SparsePoly,
    pub delta: SparsePoly,
}

fn times(p: &SparsePoly, num: i64, den: i64) -> SparsePoly {
    p.mul_scalar(&GaussRational::from_ratio(num, den))
}

/// Builds the bundle deterministically; the same term maps come out every
/// time because every operation iterates in the graded term order.
pub fn build_solution() -> SolutionBundle {
    let x = SparsePoly::var(Var::X);
    let y = SparsePoly::var(Var::Y);
    let s = SparsePoly::var(Var::S);
    let one = SparsePoly::one();
    let i = SparsePoly::i();

    let x2 = x.pow(2);
    let y2 = y.pow(2);
    let r2 = &x2 + &y2;

    let gamma = &i * &(&x2 - &y2);

    let delta = {
        let re = &y * &(&(&one + &x2) - &times(&y2, 1, 3));
        let im = &(&x * &(&(&one + &y2) - &times(&x2, 1, 3))) - &s;
        &re - &(&i * &im)
    };

    let q = {
        let even = &(&(&r2.pow(3) + &times(&(&x2.pow(2) + &y2.pow(2)), 3, 1))
            + &times(&(&x2 * &y2), 18, 1))
            + &times(&r2, 9, 1);
        let cross = &(&times(&x.pow(3), 6, 1) - &times(&(&x * &y2), 18, 1)) - &times(&x, 18, 1);
        &(&even + &times(&s.pow(2), 9, 1)) + &(&cross * &s)
    };

    let u_num = times(
        &(&(&(&r2 + &SparsePoly::integer(3)) * &(&x2 - &y2)) - &times(&(&x * &s), 6, 1)),
        -3,
        1,
    );
    let u = RationalFn::new(u_num.clone(), q.clone()).expect("q is not the zero polynomial");

    let v = {
        let z = &x + &(&i * &y);
        let z_bar = z.conj();
        let p = &(&gamma * &gamma.conj()) + &(&delta * &delta.conj());
        let w = &(&one + &x2) + &y2;
        let b = &(&z * &(&gamma.conj() - &gamma)) - &(&(&delta * &z.pow(2)) + &delta.conj());

        // 2U/w rewritten over the split denominator: u_num/q = (1/9) u_num/p
        let square = FactoredRational::new(&b * &b, vec![(p.clone(), 2)])
            .expect("p is not the zero polynomial");
        let middle = FactoredRational::new(times(&u_num, 2, 9), vec![(p.clone(), 1), (w.clone(), 1)])
            .expect("p, w are not zero");
        let last = FactoredRational::new(times(&(&(&i * &z_bar) * &b), 2, 1), vec![(p, 1), (w, 1)])
            .expect("p, w are not zero");
        square.add(&middle).add(&last).to_rational()
    };

    SolutionBundle {
        u,
        q,
        v,
        gamma,
        delta,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use num_traits::Zero;

    fn big(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn ratio(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn eval_u(x: i64, y: i64, s: i64) -> GaussRational {
        build_solution().u.eval(&big(x), &big(y), &big(s)).unwrap()
    }

    #[test]
    fn u_spot_values() {
        assert_eq!(eval_u(1, 0, 0), GaussRational::from_ratio(-12, 13));
        assert_eq!(eval_u(1, 0, 1), GaussRational::from_ratio(3, 5));
        assert_eq!(eval_u(0, 0, 2), GaussRational::zero());
        assert_eq!(eval_u(1, 1, 0), GaussRational::zero());
    }

    #[test]
    fn q_spot_values() {
        let b = build_solution();
        assert_eq!(b.q.eval(&big(1), &big(0), &big(0)), GaussRational::from_int(13));
        assert_eq!(b.q.eval(&big(0), &big(0), &big(2)), GaussRational::from_int(36));
        assert_eq!(
            b.q.eval(&big(0), &big(1), &big(3)),
            GaussRational::from_int(13 + 81)
        );
        assert_eq!(b.q.eval(&big(0), &big(0), &big(0)), GaussRational::zero());
    }

    #[test]
    fn u_denominator_is_q_verbatim() {
        // the numerator content (3) and q's content (1) are coprime, so
        // normalization must leave q untouched
        let b = build_solution();
        assert_eq!(b.u.den(), &b.q);
    }

    #[test]
    fn v_spot_values() {
        let b = build_solution();
        let at = |x: i64, y: i64, s: i64| b.v.eval(&big(x), &big(y), &big(s)).unwrap();
        assert_eq!(at(1, 1, 1), GaussRational::new(ratio(-45, 841), ratio(726, 841)));
        assert_eq!(at(1, 0, 1), GaussRational::from_ratio(-21, 25));
        assert_eq!(at(1, 0, 0), GaussRational::from_ratio(-246, 169));
        assert_eq!(at(1, 1, 0), GaussRational::new(BigRational::zero(), ratio(21, 50)));
    }

    #[test]
    fn gamma_delta_spot_values() {
        let b = build_solution();
        // delta(0,0,s) = i s: the imaginary part is what pins the origin in s
        assert_eq!(
            b.delta.eval(&big(0), &big(0), &big(1)),
            GaussRational::new(BigRational::zero(), big(1))
        );
        assert_eq!(
            b.gamma.eval(&big(2), &big(1), &big(5)),
            GaussRational::new(BigRational::zero(), big(3))
        );
    }

    #[test]
    fn construction_is_reproducible() {
        let a = build_solution();
        let b = build_solution();
        assert_eq!(a.u.num(), b.u.num());
        assert_eq!(a.u.den(), b.u.den());
        assert_eq!(a.v.num(), b.v.num());
        assert_eq!(a.v.den(), b.v.den());
        assert_eq!(a.q, b.q);
    }
}
