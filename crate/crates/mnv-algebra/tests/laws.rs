//! Randomized algebra laws for the exact kernel.
//!
//! The ring axioms run at 1024 cases; structural laws that exercise heavier
//! machinery (rational functions, factored quotients) run at the default
//! case count. Everything here asserts exact equality of term maps or
//! cross-multiplication equality of quotients.

use mnv_algebra::{
    DiffVar, FactoredRational, GaussRational, Monomial, RationalFn, SparsePoly, Var,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn big(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn arb_coeff() -> impl Strategy<Value = GaussRational> {
    ((-6i64..=6), (1i64..=4), (-6i64..=6), (1i64..=4))
        .prop_map(|(rn, rd, in_, id)| GaussRational::new(big(rn, rd), big(in_, id)))
}

fn arb_monomial() -> impl Strategy<Value = Monomial> {
    (0u32..4, 0u32..4, 0u32..3).prop_map(|(ex, ey, es)| Monomial::new(ex, ey, es))
}

fn arb_poly() -> impl Strategy<Value = SparsePoly> {
    prop::collection::vec((arb_monomial(), arb_coeff()), 0..5).prop_map(SparsePoly::from_terms)
}

fn arb_nonzero_poly() -> impl Strategy<Value = SparsePoly> {
    arb_poly().prop_filter("nonzero polynomial", |p| !p.is_zero())
}

fn arb_ratfn() -> impl Strategy<Value = RationalFn> {
    (arb_poly(), arb_nonzero_poly()).prop_map(|(n, d)| RationalFn::new(n, d).unwrap())
}

/// A small pool of nonconstant bases so factored denominators share factors
/// often enough to exercise the max-power union path.
fn base_pool() -> Vec<SparsePoly> {
    let x = SparsePoly::var(Var::X);
    let y = SparsePoly::var(Var::Y);
    let s = SparsePoly::var(Var::S);
    vec![
        &SparsePoly::one() + &(&x.pow(2) + &y.pow(2)),
        &(&x.pow(2) + &s.pow(2)) + &SparsePoly::one(),
        &(&x + &y) + &SparsePoly::one(),
    ]
}

fn arb_factored() -> impl Strategy<Value = FactoredRational> {
    (arb_poly(), 0u32..3, 0u32..3, 0u32..2).prop_map(|(n, e0, e1, e2)| {
        let pool = base_pool();
        FactoredRational::new(
            n,
            vec![
                (pool[0].clone(), e0),
                (pool[1].clone(), e1),
                (pool[2].clone(), e2),
            ],
        )
        .unwrap()
    })
}

fn arb_point() -> impl Strategy<Value = (BigRational, BigRational, BigRational)> {
    ((-5i64..=5), (1i64..=3), (-5i64..=5), (1i64..=3), (-5i64..=5), (1i64..=3))
        .prop_map(|(xn, xd, yn, yd, sn, sd)| (big(xn, xd), big(yn, yd), big(sn, sd)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1024))]

    #[test]
    fn ring_axioms(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&(&p + &q) * &r, &(&p * &r) + &(&q * &r));
        prop_assert!((&p - &p).is_zero());
        prop_assert_eq!(&p * &SparsePoly::one(), p.clone());
        prop_assert!((&p * &SparsePoly::zero()).is_zero());
    }
}

proptest! {
    #[test]
    fn derivation_property(p in arb_poly(), q in arb_poly()) {
        for v in [Var::X, Var::Y, Var::S] {
            let lhs = (&p * &q).diff(v);
            let rhs = &(&p.diff(v) * &q) + &(&p * &q.diff(v));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn wirtinger_split_of_the_x_derivative(f in arb_ratfn()) {
        let dx = f.diff(DiffVar::X);
        let split = &f.diff(DiffVar::WirtingerZ) + &f.diff(DiffVar::WirtingerZBar);
        prop_assert_eq!(dx, split);
    }

    #[test]
    fn conjugation_commutes_with_the_opposite_wirtinger(p in arb_poly(), f in arb_ratfn()) {
        prop_assert_eq!(p.wirtinger_zbar().conj(), p.conj().wirtinger_z());
        prop_assert_eq!(f.diff(DiffVar::WirtingerZBar).conj(), f.conj().diff(DiffVar::WirtingerZ));
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(p in arb_poly(), q in arb_poly(), pt in arb_point()) {
        let (x, y, s) = pt;
        let prod = (&p * &q).eval(&x, &y, &s);
        prop_assert_eq!(prod, &p.eval(&x, &y, &s) * &q.eval(&x, &y, &s));
        let sum = (&p + &q).eval(&x, &y, &s);
        prop_assert_eq!(sum, &p.eval(&x, &y, &s) + &q.eval(&x, &y, &s));
    }

    #[test]
    fn quotient_field_laws(f in arb_ratfn(), g in arb_ratfn(), h in arb_ratfn()) {
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&(&f + &g) * &h, &(&f * &h) + &(&g * &h));
        prop_assert!((&f - &f).is_zero());
        if !g.is_zero() {
            let back = &(&f * &g) / &g;
            prop_assert_eq!(back, f);
        }
    }

    #[test]
    fn normalization_is_scale_invariant_and_idempotent(f in arb_ratfn(), k in (1i64..=9), kd in (1i64..=9)) {
        let scale = SparsePoly::constant(GaussRational::from_ratio(k, kd));
        let rescaled = RationalFn::new(f.num() * &scale, f.den() * &scale).unwrap();
        // same canonical representative, not merely cross-multiplication equal
        prop_assert_eq!(rescaled.num(), f.num());
        prop_assert_eq!(rescaled.den(), f.den());
        let renorm = RationalFn::new(f.num().clone(), f.den().clone()).unwrap();
        prop_assert_eq!(renorm.num(), f.num());
        prop_assert_eq!(renorm.den(), f.den());
    }

    #[test]
    fn factored_ops_match_plain_rational_ops(a in arb_factored(), b in arb_factored()) {
        prop_assert_eq!(a.add(&b).to_rational(), &a.to_rational() + &b.to_rational());
        prop_assert_eq!(a.sub(&b).to_rational(), &a.to_rational() - &b.to_rational());
        prop_assert_eq!(a.mul(&b).to_rational(), &a.to_rational() * &b.to_rational());
        prop_assert_eq!(a.neg().to_rational(), -&a.to_rational());
        prop_assert_eq!(a.conj().to_rational(), a.to_rational().conj());
    }

    #[test]
    fn factored_diff_matches_plain_diff(a in arb_factored()) {
        for v in [DiffVar::X, DiffVar::Y, DiffVar::S, DiffVar::T, DiffVar::WirtingerZ, DiffVar::WirtingerZBar] {
            prop_assert_eq!(a.diff(v).to_rational(), a.to_rational().diff(v));
        }
    }

    #[test]
    fn cross_multiplication_equality_respects_evaluation(f in arb_ratfn(), pt in arb_point()) {
        // f written over a blown-up denominator is still the same function
        let pool = base_pool();
        let g = RationalFn::new(f.num() * &pool[0], f.den() * &pool[0]).unwrap();
        prop_assert_eq!(&g, &f);
        let (x, y, s) = pt;
        if let (Ok(a), Ok(b)) = (f.eval(&x, &y, &s), g.eval(&x, &y, &s)) {
            prop_assert_eq!(a, b);
        }
    }
}
