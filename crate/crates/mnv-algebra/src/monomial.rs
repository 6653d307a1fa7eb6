//! Monomials in the three real variables and the fixed term order.

use std::cmp::Ordering;
use std::fmt;

/// The real variables carried by every polynomial in the kernel.
///
/// `S` is shifted time: every formula is polynomial in `s = C - t`, so the
/// kernel never needs a symbolic constant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    X,
    Y,
    S,
}

/// A power product `x^ex * y^ey * s^es`.
///
/// Monomials are totally ordered by graded lexicographic order with
/// `x > y > s`: lower total degree first, ties broken by `ex`, then `ey`.
/// Every term-map iteration in the kernel walks this order ascending, which
/// is what makes normalization, evaluation and reports deterministic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub ex: u32,
    pub ey: u32,
    pub es: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { ex: 0, ey: 0, es: 0 };

    pub fn new(ex: u32, ey: u32, es: u32) -> Self {
        Monomial { ex, ey, es }
    }

    /// The monomial equal to a single variable.
    pub fn var(v: Var) -> Self {
        match v {
            Var::X => Monomial::new(1, 0, 0),
            Var::Y => Monomial::new(0, 1, 0),
            Var::S => Monomial::new(0, 0, 1),
        }
    }

    pub fn degree(&self) -> u32 {
        self.ex + self.ey + self.es
    }

    pub fn exponent(&self, v: Var) -> u32 {
        match v {
            Var::X => self.ex,
            Var::Y => self.ey,
            Var::S => self.es,
        }
    }

    /// Product of two monomials (exponent sums).
    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.ex + other.ex, self.ey + other.ey, self.es + other.es)
    }

    /// Formal derivative with respect to `v`: returns the dropped exponent
    /// and the reduced monomial, or `None` when the exponent is zero.
    pub fn diff(&self, v: Var) -> Option<(u32, Monomial)> {
        let e = self.exponent(v);
        if e == 0 {
            return None;
        }
        let mut m = *self;
        match v {
            Var::X => m.ex -= 1,
            Var::Y => m.ey -= 1,
            Var::S => m.es -= 1,
        }
        Some((e, m))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.degree(), self.ex, self.ey).cmp(&(other.degree(), other.ex, other.ey))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return write!(f, "1");
        }
        let mut parts = Vec::new();
        for (name, e) in [("x", self.ex), ("y", self.ey), ("s", self.es)] {
            match e {
                0 => {}
                1 => parts.push(name.to_string()),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        write!(f, "{}", parts.join("*"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_graded_then_lexicographic() {
        let x = Monomial::var(Var::X);
        let y = Monomial::var(Var::Y);
        let s = Monomial::var(Var::S);
        // degree dominates
        assert!(Monomial::ONE < s);
        assert!(y < x.mul(&x));
        // within a degree, x beats y beats s
        assert!(s < y);
        assert!(y < x);
        assert!(x.mul(&s) < x.mul(&x));
        assert!(y.mul(&y) < x.mul(&s));
    }

    #[test]
    fn diff_drops_one_exponent() {
        let m = Monomial::new(2, 0, 3);
        assert_eq!(m.diff(Var::X), Some((2, Monomial::new(1, 0, 3))));
        assert_eq!(m.diff(Var::Y), None);
        assert_eq!(m.diff(Var::S), Some((3, Monomial::new(2, 0, 2))));
    }

    #[test]
    fn display_is_compact() {
        assert_eq!(Monomial::ONE.to_string(), "1");
        assert_eq!(Monomial::new(2, 1, 3).to_string(), "x^2*y*s^3");
        assert_eq!(Monomial::new(0, 1, 0).to_string(), "y");
    }
}
