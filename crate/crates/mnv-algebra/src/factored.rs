//! Rational functions with factored denominators.
//!
//! A [`FactoredRational`] keeps its denominator as a list of distinct
//! polynomial bases with positive integer exponents. Two things make this
//! worth having next to [`RationalFn`]:
//!
//! * addition lifts each operand to the per-base maximum power instead of
//!   multiplying whole denominators, and
//! * the quotient rule raises each relevant base's exponent by one instead
//!   of squaring the denominator, and bases that the derivative kills (for
//!   example an `x`,`y`-only base under `d/ds`) are left untouched.
//!
//! Assembling a PDE residual with many quotient-rule passes this way keeps
//! the single common denominator as a short factor list and the numerator at
//! a modest degree, where the pairwise [`RationalFn`] arithmetic would pile
//! squarings on top of products. No factor is ever cancelled; zero testing
//! happens on the numerator alone, which is sound because the bases are
//! nonzero polynomials.

use num_rational::BigRational;

use crate::error::AlgebraError;
use crate::gauss::GaussRational;
use crate::monomial::Var;
use crate::poly::SparsePoly;
use crate::ratfn::{DiffVar, RationalFn};

/// `num / prod(base_i ^ exp_i)` with the product never expanded.
#[derive(Clone, Debug)]
pub struct FactoredRational {
    num: SparsePoly,
    den: Vec<(SparsePoly, u32)>,
}

impl FactoredRational {
    /// Builds a quotient from a numerator and denominator factors.
    ///
    /// Zero-exponent factors are dropped, constant factors are folded into
    /// the numerator, duplicate bases are merged, and a zero base is an
    /// error.
    pub fn new(
        num: SparsePoly,
        den: Vec<(SparsePoly, u32)>,
    ) -> Result<Self, AlgebraError> {
        let mut out = FactoredRational { num, den: Vec::new() };
        for (base, exp) in den {
            if exp == 0 {
                continue;
            }
            if base.is_zero() {
                return Err(AlgebraError::ZeroDenominator);
            }
            if base.total_degree() == 0 {
                let c = base
                    .leading_term()
                    .map(|(_, c)| c.clone())
                    .expect("nonzero constant");
                let inv = c.recip().expect("nonzero constant");
                let mut scale = GaussRational::one();
                for _ in 0..exp {
                    scale = &scale * &inv;
                }
                out.num = out.num.mul_scalar(&scale);
                continue;
            }
            out.push_factor(base, exp);
        }
        Ok(out)
    }

    pub fn from_poly(p: SparsePoly) -> Self {
        FactoredRational { num: p, den: Vec::new() }
    }

    pub fn from_rational(f: &RationalFn) -> Self {
        FactoredRational::new(f.num().clone(), vec![(f.den().clone(), 1)])
            .expect("denominator of a valid rational function")
    }

    pub fn num(&self) -> &SparsePoly {
        &self.num
    }

    pub fn den_factors(&self) -> &[(SparsePoly, u32)] {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Numerator term count, the telemetry that matters during assembly.
    pub fn num_terms(&self) -> usize {
        self.num.n_terms()
    }

    pub fn num_degree(&self) -> u32 {
        self.num.total_degree()
    }

    /// Total degree of the denominator product without expanding it.
    pub fn den_degree(&self) -> u32 {
        self.den.iter().map(|(b, e)| b.total_degree() * e).sum()
    }

    fn push_factor(&mut self, base: SparsePoly, exp: u32) {
        if exp == 0 {
            return;
        }
        if let Some(entry) = self.den.iter_mut().find(|(b, _)| *b == base) {
            entry.1 += exp;
        } else {
            self.den.push((base, exp));
        }
    }

    fn exponent_of(&self, base: &SparsePoly) -> u32 {
        self.den
            .iter()
            .find(|(b, _)| b == base)
            .map_or(0, |(_, e)| *e)
    }

    /// The union denominator for addition: every base at the maximum of the
    /// two exponents, in deterministic first-appearance order.
    fn union_den(&self, other: &Self) -> Vec<(SparsePoly, u32)> {
        let mut union = self.den.clone();
        for (b, e) in &other.den {
            if let Some(entry) = union.iter_mut().find(|(ub, _)| ub == b) {
                entry.1 = entry.1.max(*e);
            } else {
                union.push((b.clone(), *e));
            }
        }
        union
    }

    /// Numerator lifted to a target denominator that dominates this one.
    fn lift_num(&self, target: &[(SparsePoly, u32)]) -> SparsePoly {
        let mut lifted = self.num.clone();
        for (b, te) in target {
            let have = self.exponent_of(b);
            debug_assert!(*te >= have, "lift target must dominate");
            for _ in have..*te {
                lifted = &lifted * b;
            }
        }
        lifted
    }

    pub fn add(&self, other: &Self) -> Self {
        let union = self.union_den(other);
        let num = &self.lift_num(&union) + &other.lift_num(&union);
        FactoredRational { num, den: union }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        FactoredRational {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = FactoredRational {
            num: &self.num * &other.num,
            den: self.den.clone(),
        };
        for (b, e) in &other.den {
            out.push_factor(b.clone(), *e);
        }
        out
    }

    pub fn mul_poly(&self, p: &SparsePoly) -> Self {
        FactoredRational {
            num: &self.num * p,
            den: self.den.clone(),
        }
    }

    pub fn mul_scalar(&self, c: &GaussRational) -> Self {
        FactoredRational {
            num: self.num.mul_scalar(c),
            den: self.den.clone(),
        }
    }

    /// Power-aware quotient rule.
    ///
    /// For `f = n / prod b_i^{e_i}` and a derivation `d`, with `D` the set of
    /// bases whose derivative is nonzero:
    ///
    /// ```text
    /// f' = [ d(n) * prod_{i in D} b_i
    ///        - n * sum_{i in D} e_i d(b_i) prod_{j in D, j != i} b_j ]
    ///      / ( prod_{i in D} b_i^{e_i + 1} * prod_{i not in D} b_i^{e_i} )
    /// ```
    ///
    /// Only the exponents of bases the derivation touches grow.
    pub fn diff(&self, v: DiffVar) -> Self {
        if let DiffVar::T = v {
            return self.diff(DiffVar::S).neg();
        }
        let d = |p: &SparsePoly| -> SparsePoly {
            match v {
                DiffVar::X => p.diff(Var::X),
                DiffVar::Y => p.diff(Var::Y),
                DiffVar::S => p.diff(Var::S),
                DiffVar::WirtingerZ => p.wirtinger_z(),
                DiffVar::WirtingerZBar => p.wirtinger_zbar(),
                DiffVar::T => unreachable!("handled above"),
            }
        };
        let touched: Vec<(usize, SparsePoly)> = self
            .den
            .iter()
            .enumerate()
            .filter_map(|(i, (b, _))| {
                let db = d(b);
                if db.is_zero() {
                    None
                } else {
                    Some((i, db))
                }
            })
            .collect();
        // d(n) * prod over touched bases
        let mut num = d(&self.num);
        for (i, _) in &touched {
            num = &num * &self.den[*i].0;
        }
        // minus n * sum of e_i * d(b_i) * prod of the other touched bases
        for (i, db) in &touched {
            let e = self.den[*i].1;
            let mut term = self.num.mul_scalar(&GaussRational::from_int(e as i64));
            term = &term * db;
            for (j, _) in &touched {
                if j != i {
                    term = &term * &self.den[*j].0;
                }
            }
            num = &num - &term;
        }
        let den = self
            .den
            .iter()
            .enumerate()
            .map(|(i, (b, e))| {
                let bump = touched.iter().any(|(j, _)| *j == i) as u32;
                (b.clone(), e + bump)
            })
            .collect();
        FactoredRational { num, den }
    }

    /// Pointwise complex conjugate.
    pub fn conj(&self) -> Self {
        FactoredRational {
            num: self.num.conj(),
            den: self.den.iter().map(|(b, e)| (b.conj(), *e)).collect(),
        }
    }

    /// Expands the denominator product into a plain [`RationalFn`].
    pub fn to_rational(&self) -> RationalFn {
        let mut den = SparsePoly::one();
        for (b, e) in &self.den {
            den = &den * &b.pow(*e);
        }
        RationalFn::new(self.num.clone(), den).expect("nonzero factor product")
    }

    /// Exact evaluation without expanding the denominator.
    pub fn eval(
        &self,
        x: &BigRational,
        y: &BigRational,
        s: &BigRational,
    ) -> Result<GaussRational, AlgebraError> {
        let mut den = GaussRational::one();
        for (b, e) in &self.den {
            let v = b.eval(x, y, s);
            if v.is_zero() {
                return Err(AlgebraError::EvalAtPole {
                    x: x.to_string(),
                    y: y.to_string(),
                    s: s.to_string(),
                });
            }
            for _ in 0..*e {
                den = &den * &v;
            }
        }
        Ok(&self.num.eval(x, y, s) / &den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn x() -> SparsePoly {
        SparsePoly::var(Var::X)
    }
    fn y() -> SparsePoly {
        SparsePoly::var(Var::Y)
    }
    fn s() -> SparsePoly {
        SparsePoly::var(Var::S)
    }
    fn r(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn p_w() -> SparsePoly {
        // 1 + x^2 + y^2
        &SparsePoly::one() + &(&x().pow(2) + &y().pow(2))
    }
    fn p_k() -> SparsePoly {
        // x^2 + s^2 + 1, so it has an s-dependence
        &(&x().pow(2) + &s().pow(2)) + &SparsePoly::one()
    }

    #[test]
    fn constant_factors_fold_into_the_numerator() {
        let f = FactoredRational::new(x(), vec![(SparsePoly::integer(9), 1), (p_w(), 1)]).unwrap();
        assert_eq!(f.den_factors().len(), 1);
        assert_eq!(
            f.to_rational(),
            RationalFn::new(x(), p_w().mul_scalar(&GaussRational::from_int(9))).unwrap()
        );
    }

    #[test]
    fn addition_uses_max_powers_not_products() {
        let a = FactoredRational::new(x(), vec![(p_w(), 2)]).unwrap();
        let b = FactoredRational::new(y(), vec![(p_w(), 1), (p_k(), 1)]).unwrap();
        let sum = a.add(&b);
        // union denominator is W^2 * K, degree 6, not W^3 K
        assert_eq!(sum.den_degree(), 6);
        assert_eq!(
            sum.to_rational(),
            &a.to_rational() + &b.to_rational()
        );
    }

    #[test]
    fn multiplication_sums_exponents() {
        let a = FactoredRational::new(x(), vec![(p_w(), 1)]).unwrap();
        let sq = a.mul(&a);
        assert_eq!(sq.den_factors(), &[(p_w(), 2)]);
        assert_eq!(sq.to_rational(), &a.to_rational() * &a.to_rational());
    }

    #[test]
    fn diff_bumps_only_touched_bases() {
        // f = x / (W K); d/ds touches K (s^2 term) but not W
        let f = FactoredRational::new(x(), vec![(p_w(), 1), (p_k(), 1)]).unwrap();
        let ds = f.diff(DiffVar::S);
        assert_eq!(ds.exponent_of(&p_w()), 1);
        assert_eq!(ds.exponent_of(&p_k()), 2);
        assert_eq!(ds.to_rational(), f.to_rational().diff(DiffVar::S));
        // d/dx touches both
        let dx = f.diff(DiffVar::X);
        assert_eq!(dx.exponent_of(&p_w()), 2);
        assert_eq!(dx.exponent_of(&p_k()), 2);
        assert_eq!(dx.to_rational(), f.to_rational().diff(DiffVar::X));
    }

    #[test]
    fn wirtinger_and_time_match_the_plain_quotient_rule() {
        let f = FactoredRational::new(&x() * &y(), vec![(p_w(), 1), (p_k(), 2)]).unwrap();
        for v in [DiffVar::WirtingerZ, DiffVar::WirtingerZBar, DiffVar::T] {
            assert_eq!(f.diff(v).to_rational(), f.to_rational().diff(v));
        }
    }

    #[test]
    fn conj_commutes_with_to_rational() {
        let num = &x() + &(&SparsePoly::i() * &y());
        let f = FactoredRational::new(num, vec![(p_w(), 1)]).unwrap();
        assert_eq!(f.conj().to_rational(), f.to_rational().conj());
    }

    #[test]
    fn eval_agrees_with_the_expanded_form() {
        let f = FactoredRational::new(&x() * &s(), vec![(p_w(), 2), (p_k(), 1)]).unwrap();
        let v = f.eval(&r(1), &r(2), &r(3)).unwrap();
        assert_eq!(v, f.to_rational().eval(&r(1), &r(2), &r(3)).unwrap());
    }

    #[test]
    fn zero_base_is_rejected() {
        assert!(FactoredRational::new(x(), vec![(SparsePoly::zero(), 1)]).is_err());
    }
}
