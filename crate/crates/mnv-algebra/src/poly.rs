//! Sparse multivariate polynomials over Gaussian rationals.
//!
//! A polynomial is a `BTreeMap` from [`Monomial`] to nonzero
//! [`GaussRational`]; the map order is the fixed graded-lexicographic order,
//! so iteration is deterministic and two polynomials are equal exactly when
//! their term maps are identical. Multiplication stages partial products in
//! a `HashMap` and only sorts once at the end.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::gauss::GaussRational;
use crate::monomial::{Monomial, Var};

/// A sparse polynomial in `x`, `y`, `s` with Gaussian-rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparsePoly {
    terms: BTreeMap<Monomial, GaussRational>,
}

impl SparsePoly {
    pub fn zero() -> Self {
        SparsePoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        SparsePoly::constant(GaussRational::one())
    }

    /// The imaginary unit as a constant polynomial.
    pub fn i() -> Self {
        SparsePoly::constant(GaussRational::i())
    }

    pub fn constant(c: GaussRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::ONE, c);
        }
        SparsePoly { terms }
    }

    pub fn integer(n: i64) -> Self {
        SparsePoly::constant(GaussRational::from_int(n))
    }

    /// The rational constant `num/den`.
    pub fn ratio(num: i64, den: i64) -> Self {
        SparsePoly::constant(GaussRational::from_ratio(num, den))
    }

    pub fn var(v: Var) -> Self {
        SparsePoly::monomial(Monomial::var(v), GaussRational::one())
    }

    pub fn monomial(m: Monomial, c: GaussRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        SparsePoly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, GaussRational)>>(iter: I) -> Self {
        let mut p = SparsePoly::zero();
        for (m, c) in iter {
            p.insert_add(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn n_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree; the zero polynomial reports 0.
    pub fn total_degree(&self) -> u32 {
        self.terms.keys().next_back().map_or(0, |m| m.degree())
    }

    /// Terms in ascending graded-lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &GaussRational)> {
        self.terms.iter()
    }

    /// The term that is largest in the fixed order.
    pub fn leading_term(&self) -> Option<(&Monomial, &GaussRational)> {
        self.terms.iter().next_back()
    }

    pub fn coeff(&self, m: &Monomial) -> Option<&GaussRational> {
        self.terms.get(m)
    }

    fn insert_add(&mut self, m: Monomial, c: GaussRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn mul_scalar(&self, c: &GaussRational) -> SparsePoly {
        if c.is_zero() {
            return SparsePoly::zero();
        }
        SparsePoly {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    /// Integer power by repeated multiplication.
    pub fn pow(&self, e: u32) -> SparsePoly {
        let mut acc = SparsePoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Formal partial derivative.
    pub fn diff(&self, v: Var) -> SparsePoly {
        let mut out = SparsePoly::zero();
        for (m, c) in &self.terms {
            if let Some((e, reduced)) = m.diff(v) {
                out.insert_add(reduced, c * &GaussRational::from_int(e as i64));
            }
        }
        out
    }

    /// Wirtinger derivative `(d/dx - i d/dy) / 2`.
    pub fn wirtinger_z(&self) -> SparsePoly {
        let half = GaussRational::from_ratio(1, 2);
        let minus_half_i = &GaussRational::from_ratio(-1, 2) * &GaussRational::i();
        &self.diff(Var::X).mul_scalar(&half) + &self.diff(Var::Y).mul_scalar(&minus_half_i)
    }

    /// Wirtinger derivative `(d/dx + i d/dy) / 2`.
    pub fn wirtinger_zbar(&self) -> SparsePoly {
        let half = GaussRational::from_ratio(1, 2);
        let half_i = &half * &GaussRational::i();
        &self.diff(Var::X).mul_scalar(&half) + &self.diff(Var::Y).mul_scalar(&half_i)
    }

    /// Coefficient-wise complex conjugation.
    ///
    /// Because `x`, `y`, `s` are real variables this agrees with pointwise
    /// conjugation of the polynomial's values.
    pub fn conj(&self) -> SparsePoly {
        SparsePoly {
            terms: self.terms.iter().map(|(m, c)| (*m, c.conj())).collect(),
        }
    }

    /// Exact evaluation at a rational point, accumulating term values in the
    /// fixed monomial order over a table of variable powers.
    pub fn eval(&self, x: &BigRational, y: &BigRational, s: &BigRational) -> GaussRational {
        let (mut mx, mut my, mut ms) = (0u32, 0u32, 0u32);
        for m in self.terms.keys() {
            mx = mx.max(m.ex);
            my = my.max(m.ey);
            ms = ms.max(m.es);
        }
        let xp = rational_powers(x, mx);
        let yp = rational_powers(y, my);
        let sp = rational_powers(s, ms);
        let mut acc = GaussRational::zero();
        for (m, c) in &self.terms {
            let v = &xp[m.ex as usize] * &yp[m.ey as usize] * &sp[m.es as usize];
            acc = &acc + &c.mul_rational(&v);
        }
        acc
    }

    /// Partial evaluation: substitutes a rational value for one variable.
    pub fn substitute(&self, v: Var, value: &BigRational) -> SparsePoly {
        let mut out = SparsePoly::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            let mut reduced = *m;
            match v {
                Var::X => reduced.ex = 0,
                Var::Y => reduced.ey = 0,
                Var::S => reduced.es = 0,
            }
            let scale = pow_rational(value, e);
            out.insert_add(reduced, c.mul_rational(&scale));
        }
        out
    }

    /// Exchanges the roles of `x` and `y`.
    pub fn swap_xy(&self) -> SparsePoly {
        SparsePoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Monomial::new(m.ey, m.ex, m.es), c.clone()))
                .collect(),
        }
    }

    /// Substitutes `x -> -x`, `y -> -y`, `s -> -s`.
    pub fn negate_vars(&self) -> SparsePoly {
        SparsePoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let c = if m.degree() % 2 == 1 { -c } else { c.clone() };
                    (*m, c)
                })
                .collect(),
        }
    }

    /// The positive rational `c` such that `self / c` has coprime integer
    /// parts across all real and imaginary coefficient components.
    ///
    /// Returns 1 for the zero polynomial so callers can divide blindly.
    pub fn content(&self) -> BigRational {
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        let mut fold = |r: &BigRational| {
            if r.is_zero() {
                return;
            }
            num_gcd = num_gcd.gcd(r.numer());
            den_lcm = den_lcm.lcm(r.denom());
        };
        for c in self.terms.values() {
            fold(c.re());
            fold(c.im());
        }
        if num_gcd.is_zero() {
            return BigRational::one();
        }
        BigRational::new(num_gcd, den_lcm)
    }

    /// Divides every coefficient by a nonzero rational.
    pub fn div_rational(&self, r: &BigRational) -> SparsePoly {
        assert!(!r.is_zero(), "division of a polynomial by the zero rational");
        let inv = GaussRational::from(r.recip());
        self.mul_scalar(&inv)
    }
}

fn rational_powers(base: &BigRational, max: u32) -> Vec<BigRational> {
    let mut powers = Vec::with_capacity(max as usize + 1);
    powers.push(BigRational::one());
    for k in 1..=max as usize {
        powers.push(&powers[k - 1] * base);
    }
    powers
}

fn pow_rational(base: &BigRational, e: u32) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..e {
        acc *= base;
    }
    acc
}

impl<'a> Neg for &'a SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        SparsePoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl<'a, 'b> Add<&'b SparsePoly> for &'a SparsePoly {
    type Output = SparsePoly;
    fn add(self, rhs: &'b SparsePoly) -> SparsePoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert_add(*m, c.clone());
        }
        out
    }
}

impl<'a, 'b> Sub<&'b SparsePoly> for &'a SparsePoly {
    type Output = SparsePoly;
    fn sub(self, rhs: &'b SparsePoly) -> SparsePoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert_add(*m, -c);
        }
        out
    }
}

impl<'a, 'b> Mul<&'b SparsePoly> for &'a SparsePoly {
    type Output = SparsePoly;
    fn mul(self, rhs: &'b SparsePoly) -> SparsePoly {
        if self.is_zero() || rhs.is_zero() {
            return SparsePoly::zero();
        }
        let mut staging: HashMap<Monomial, GaussRational> =
            HashMap::with_capacity(self.terms.len() * rhs.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let m = ma.mul(mb);
                let c = ca * cb;
                match staging.entry(m) {
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                    std::collections::hash_map::Entry::Occupied(mut e) => {
                        let sum = e.get() + &c;
                        *e.get_mut() = sum;
                    }
                }
            }
        }
        SparsePoly {
            terms: staging.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

macro_rules! forward_poly_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<SparsePoly> for SparsePoly {
            type Output = SparsePoly;
            fn $method(self, rhs: SparsePoly) -> SparsePoly {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $trait<&'a SparsePoly> for SparsePoly {
            type Output = SparsePoly;
            fn $method(self, rhs: &'a SparsePoly) -> SparsePoly {
                (&self).$method(rhs)
            }
        }
        impl<'a> $trait<SparsePoly> for &'a SparsePoly {
            type Output = SparsePoly;
            fn $method(self, rhs: SparsePoly) -> SparsePoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_poly_binop!(Add, add);
forward_poly_binop!(Sub, sub);
forward_poly_binop!(Mul, mul);

impl Neg for SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        -&self
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let body = if m.degree() == 0 {
                format!("{c}")
            } else if c == &GaussRational::one() {
                format!("{m}")
            } else if c == &GaussRational::from_int(-1) {
                format!("-{m}")
            } else if c.is_real() || c.re().is_zero() {
                format!("{c}*{m}")
            } else {
                format!("({c})*{m}")
            };
            if first {
                write!(f, "{body}")?;
                first = false;
            } else if let Some(rest) = body.strip_prefix('-') {
                write!(f, " - {rest}")?;
            } else {
                write!(f, " + {body}")?;
            }
        }
        Ok(())
    }
}
