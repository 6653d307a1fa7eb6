//! Unreduced rational functions and zero certificates.
//!
//! A [`RationalFn`] is a quotient of two sparse polynomials. The kernel never
//! computes multivariate GCDs: quotients stay unreduced, normalization is
//! content plus a denominator sign rule, and equality is decided by
//! cross-multiplication. Every verification in the workbench bottoms out in
//! [`RationalFn::zero_certificate`], which is just "is the numerator the
//! empty term map" plus telemetry.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::AlgebraError;
use crate::gauss::GaussRational;
use crate::monomial::Var;
use crate::poly::SparsePoly;

/// Differentiation directions for rational functions.
///
/// `T` is time: because every polynomial lives in `s = C - t`, the time
/// derivative is the negated `s` derivative. The Wirtinger directions are
/// `z = (d/dx - i d/dy)/2` and `zbar = (d/dx + i d/dy)/2` for `z = x + iy`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiffVar {
    X,
    Y,
    S,
    T,
    WirtingerZ,
    WirtingerZBar,
}

/// Outcome of a zero test: whether the examined numerator was the empty term
/// map, plus how large the examined polynomial was.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ZeroCertificate {
    pub is_zero: bool,
    /// Term count of the examined numerator (0 when it is zero).
    pub num_terms: usize,
    /// Total degree of the examined numerator (0 when it is zero).
    pub num_degree: u32,
}

impl ZeroCertificate {
    pub fn for_poly(p: &SparsePoly) -> Self {
        ZeroCertificate {
            is_zero: p.is_zero(),
            num_terms: p.n_terms(),
            num_degree: p.total_degree(),
        }
    }
}

/// A quotient `num/den` with `den` nonzero, normalized but not reduced.
///
/// Normalization divides the joint coefficient content out of both
/// polynomials and flips the sign so the denominator's leading coefficient
/// has positive real part (or positive imaginary part when the real part is
/// zero). Numerator and denominator may still share polynomial factors;
/// every consumer tolerates that.
#[derive(Clone, Debug)]
pub struct RationalFn {
    num: SparsePoly,
    den: SparsePoly,
}

impl RationalFn {
    pub fn new(num: SparsePoly, den: SparsePoly) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::ZeroDenominator);
        }
        let mut f = RationalFn { num, den };
        f.normalize();
        Ok(f)
    }

    pub fn from_poly(p: SparsePoly) -> Self {
        RationalFn::new(p, SparsePoly::one()).expect("unit denominator")
    }

    pub fn zero() -> Self {
        RationalFn::from_poly(SparsePoly::zero())
    }

    pub fn one() -> Self {
        RationalFn::from_poly(SparsePoly::one())
    }

    pub fn var(v: Var) -> Self {
        RationalFn::from_poly(SparsePoly::var(v))
    }

    pub fn num(&self) -> &SparsePoly {
        &self.num
    }

    pub fn den(&self) -> &SparsePoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The zero certificate for this function's numerator.
    pub fn zero_certificate(&self) -> ZeroCertificate {
        ZeroCertificate::for_poly(&self.num)
    }

    fn normalize(&mut self) {
        let joint = if self.num.is_zero() {
            self.den.content()
        } else {
            rational_gcd(&self.num.content(), &self.den.content())
        };
        self.num = self.num.div_rational(&joint);
        self.den = self.den.div_rational(&joint);
        let lead = self
            .den
            .leading_term()
            .map(|(_, c)| c.clone())
            .expect("nonzero denominator");
        let flip = if lead.re().is_zero() {
            lead.im().is_negative()
        } else {
            lead.re().is_negative()
        };
        if flip {
            self.num = -&self.num;
            self.den = -&self.den;
        }
    }

    /// Exact derivative by the quotient rule; the denominator squares, no
    /// cancellation is attempted.
    pub fn diff(&self, v: DiffVar) -> RationalFn {
        let (dn, dd) = match v {
            DiffVar::X => (self.num.diff(Var::X), self.den.diff(Var::X)),
            DiffVar::Y => (self.num.diff(Var::Y), self.den.diff(Var::Y)),
            DiffVar::S => (self.num.diff(Var::S), self.den.diff(Var::S)),
            DiffVar::T => {
                let f = self.diff(DiffVar::S);
                return -&f;
            }
            DiffVar::WirtingerZ => (self.num.wirtinger_z(), self.den.wirtinger_z()),
            DiffVar::WirtingerZBar => (self.num.wirtinger_zbar(), self.den.wirtinger_zbar()),
        };
        let num = &(&dn * &self.den) - &(&self.num * &dd);
        let den = &self.den * &self.den;
        RationalFn::new(num, den).expect("square of a nonzero polynomial")
    }

    /// Pointwise complex conjugate (valid because the variables are real).
    pub fn conj(&self) -> RationalFn {
        RationalFn::new(self.num.conj(), self.den.conj()).expect("conjugate of nonzero")
    }

    /// Division that reports a zero divisor instead of panicking.
    pub fn checked_div(&self, rhs: &RationalFn) -> Result<RationalFn, AlgebraError> {
        if rhs.is_zero() {
            return Err(AlgebraError::DivisionByZeroFunction);
        }
        RationalFn::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    /// Exact evaluation; fails when the denominator vanishes at the point.
    pub fn eval(
        &self,
        x: &BigRational,
        y: &BigRational,
        s: &BigRational,
    ) -> Result<GaussRational, AlgebraError> {
        let d = self.den.eval(x, y, s);
        if d.is_zero() {
            return Err(AlgebraError::EvalAtPole {
                x: x.to_string(),
                y: y.to_string(),
                s: s.to_string(),
            });
        }
        Ok(&self.num.eval(x, y, s) / &d)
    }
}

/// gcd of two positive rationals in lowest terms:
/// `gcd(p1/q1, p2/q2) = gcd(p1, p2) / lcm(q1, q2)`.
fn rational_gcd(a: &BigRational, b: &BigRational) -> BigRational {
    use num_integer::Integer;
    BigRational::new(a.numer().gcd(b.numer()), a.denom().lcm(b.denom()))
}

/// Equality by cross-multiplication: `f = g` iff
/// `f.num * g.den - g.num * f.den` is the zero polynomial.
impl PartialEq for RationalFn {
    fn eq(&self, other: &Self) -> bool {
        (&(&self.num * &other.den) - &(&other.num * &self.den)).is_zero()
    }
}

impl<'a> Neg for &'a RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        RationalFn {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl<'a, 'b> Add<&'b RationalFn> for &'a RationalFn {
    type Output = RationalFn;
    fn add(self, rhs: &'b RationalFn) -> RationalFn {
        if self.den == rhs.den {
            return RationalFn::new(&self.num + &rhs.num, self.den.clone())
                .expect("shared nonzero denominator");
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        RationalFn::new(num, den).expect("product of nonzero denominators")
    }
}

impl<'a, 'b> Sub<&'b RationalFn> for &'a RationalFn {
    type Output = RationalFn;
    fn sub(self, rhs: &'b RationalFn) -> RationalFn {
        self + &(-rhs)
    }
}

impl<'a, 'b> Mul<&'b RationalFn> for &'a RationalFn {
    type Output = RationalFn;
    fn mul(self, rhs: &'b RationalFn) -> RationalFn {
        RationalFn::new(&self.num * &rhs.num, &self.den * &rhs.den)
            .expect("product of nonzero denominators")
    }
}

impl<'a, 'b> Div<&'b RationalFn> for &'a RationalFn {
    type Output = RationalFn;
    fn div(self, rhs: &'b RationalFn) -> RationalFn {
        self.checked_div(rhs).expect("division by zero rational function")
    }
}

macro_rules! forward_rf_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<RationalFn> for RationalFn {
            type Output = RationalFn;
            fn $method(self, rhs: RationalFn) -> RationalFn {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $trait<&'a RationalFn> for RationalFn {
            type Output = RationalFn;
            fn $method(self, rhs: &'a RationalFn) -> RationalFn {
                (&self).$method(rhs)
            }
        }
        impl<'a> $trait<RationalFn> for &'a RationalFn {
            type Output = RationalFn;
            fn $method(self, rhs: RationalFn) -> RationalFn {
                self.$method(&rhs)
            }
        }
    };
}

forward_rf_binop!(Add, add);
forward_rf_binop!(Sub, sub);
forward_rf_binop!(Mul, mul);
forward_rf_binop!(Div, div);

impl Neg for RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        -&self
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == SparsePoly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}
