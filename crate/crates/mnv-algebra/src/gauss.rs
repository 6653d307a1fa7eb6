//! Gaussian rationals: the exact coefficient field.
//!
//! A [`GaussRational`] is `re + im*i` with both parts arbitrary-precision
//! rationals. `num_rational::BigRational` keeps each part in lowest terms
//! with a positive denominator, so the stored representation is unique and
//! derived equality/hashing are structural.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An exact complex number with rational real and imaginary parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussRational {
    re: BigRational,
    im: BigRational,
}

impl GaussRational {
    /// Builds a value from its two rational parts.
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussRational { re, im }
    }

    /// The rational `n` as a Gaussian rational.
    pub fn from_int(n: i64) -> Self {
        GaussRational::new(BigRational::from_integer(BigInt::from(n)), BigRational::zero())
    }

    /// The rational `num/den` as a Gaussian rational.
    ///
    /// Panics if `den == 0`; ratios in this crate are always written with a
    /// literal nonzero denominator.
    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "rational literal with zero denominator");
        GaussRational::new(
            BigRational::new(BigInt::from(num), BigInt::from(den)),
            BigRational::zero(),
        )
    }

    /// Additive identity.
    pub fn zero() -> Self {
        GaussRational::new(BigRational::zero(), BigRational::zero())
    }

    /// Multiplicative identity.
    pub fn one() -> Self {
        GaussRational::new(BigRational::one(), BigRational::zero())
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussRational::new(BigRational::zero(), BigRational::one())
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Self {
        GaussRational::new(self.re.clone(), -self.im.clone())
    }

    /// `re^2 + im^2`, the squared magnitude, as a rational.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(GaussRational::new(&self.re / &n, -(&self.im / &n)))
    }

    /// Scales by a plain rational; used by evaluation and normalization.
    pub fn mul_rational(&self, r: &BigRational) -> GaussRational {
        GaussRational::new(&self.re * r, &self.im * r)
    }
}

impl From<i64> for GaussRational {
    fn from(n: i64) -> Self {
        GaussRational::from_int(n)
    }
}

impl From<BigRational> for GaussRational {
    fn from(re: BigRational) -> Self {
        GaussRational::new(re, BigRational::zero())
    }
}

impl<'a> Neg for &'a GaussRational {
    type Output = GaussRational;
    fn neg(self) -> GaussRational {
        GaussRational::new(-self.re.clone(), -self.im.clone())
    }
}

impl<'a, 'b> Add<&'b GaussRational> for &'a GaussRational {
    type Output = GaussRational;
    fn add(self, rhs: &'b GaussRational) -> GaussRational {
        GaussRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl<'a, 'b> Sub<&'b GaussRational> for &'a GaussRational {
    type Output = GaussRational;
    fn sub(self, rhs: &'b GaussRational) -> GaussRational {
        GaussRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl<'a, 'b> Mul<&'b GaussRational> for &'a GaussRational {
    type Output = GaussRational;
    fn mul(self, rhs: &'b GaussRational) -> GaussRational {
        GaussRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl<'a, 'b> Div<&'b GaussRational> for &'a GaussRational {
    type Output = GaussRational;
    fn div(self, rhs: &'b GaussRational) -> GaussRational {
        let inv = rhs.recip().expect("division by zero Gaussian rational");
        self * &inv
    }
}

/// Forwards the owned-operand variants to the reference implementations.
macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<GaussRational> for GaussRational {
            type Output = GaussRational;
            fn $method(self, rhs: GaussRational) -> GaussRational {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $trait<&'a GaussRational> for GaussRational {
            type Output = GaussRational;
            fn $method(self, rhs: &'a GaussRational) -> GaussRational {
                (&self).$method(rhs)
            }
        }
        impl<'a> $trait<GaussRational> for &'a GaussRational {
            type Output = GaussRational;
            fn $method(self, rhs: GaussRational) -> GaussRational {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for GaussRational {
    type Output = GaussRational;
    fn neg(self) -> GaussRational {
        -&self
    }
}

impl fmt::Display for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn imag(im: &BigRational) -> String {
            if im.abs().is_one() {
                "i".to_string()
            } else {
                format!("{}*i", im.abs())
            }
        }
        if self.is_zero() {
            return write!(f, "0");
        }
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        if self.re.is_zero() {
            let sign = if self.im.is_negative() { "-" } else { "" };
            return write!(f, "{}{}", sign, imag(&self.im));
        }
        let sign = if self.im.is_negative() { "-" } else { "+" };
        write!(f, "{} {} {}", self.re, sign, imag(&self.im))
    }
}
