//! Compiled floating-point evaluation of rational functions.
//!
//! A `FieldEvaluator` freezes a `RationalFn` into flat coefficient tables once,
//! then evaluates numerator and denominator with compensated (Neumaier)
//! summation over the fixed ascending monomial order. The same inputs always
//! produce the same bits, independent of threading, which is what makes the
//! quadrature and probe reports diffable.

use mnv_algebra::{RationalFn, SparsePoly};
use num_complex::Complex64;
use num_traits::ToPrimitive;

use crate::error::NumericsError;

/// Largest variable exponent the power tables accommodate. The fields handled
/// here stay well below this (the verified denominators peak at degree 16).
const MAX_EXPONENT: usize = 32;

/// Magnitude below which a denominator counts as vanishing.
const SINGULAR_FLOOR: f64 = 1e-300;

#[derive(Debug, Clone, Copy)]
struct Term {
    re: f64,
    im: f64,
    ex: u32,
    ey: u32,
    es: u32,
}

#[derive(Debug, Clone)]
struct CompiledPoly {
    terms: Vec<Term>,
}

impl CompiledPoly {
    fn new(p: &SparsePoly) -> Self {
        let terms = p
            .iter()
            .map(|(m, c)| {
                assert!(
                    (m.ex as usize) <= MAX_EXPONENT
                        && (m.ey as usize) <= MAX_EXPONENT
                        && (m.es as usize) <= MAX_EXPONENT,
                    "exponent exceeds the compiled power-table size"
                );
                Term {
                    re: c.re().to_f64().expect("coefficient convertible to f64"),
                    im: c.im().to_f64().expect("coefficient convertible to f64"),
                    ex: m.ex,
                    ey: m.ey,
                    es: m.es,
                }
            })
            .collect();
        CompiledPoly { terms }
    }

    fn eval(&self, x: f64, y: f64, s: f64) -> Complex64 {
        let mut xp = [1.0_f64; MAX_EXPONENT + 1];
        let mut yp = [1.0_f64; MAX_EXPONENT + 1];
        let mut sp = [1.0_f64; MAX_EXPONENT + 1];
        for k in 1..=MAX_EXPONENT {
            xp[k] = xp[k - 1] * x;
            yp[k] = yp[k - 1] * y;
            sp[k] = sp[k - 1] * s;
        }
        let mut re = NeumaierSum::new();
        let mut im = NeumaierSum::new();
        for t in &self.terms {
            let m = xp[t.ex as usize] * yp[t.ey as usize] * sp[t.es as usize];
            if t.re != 0.0 {
                re.add(t.re * m);
            }
            if t.im != 0.0 {
                im.add(t.im * m);
            }
        }
        Complex64::new(re.total(), im.total())
    }
}

/// Kahan-Babuska (Neumaier) compensated accumulator.
///
/// Additions happen in the caller's order; the compensation term mops up the
/// low bits that a plain `+=` would discard.
#[derive(Debug, Clone, Copy, Default)]
pub struct NeumaierSum {
    sum: f64,
    compensation: f64,
}

impl NeumaierSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, value: f64) {
        let t = self.sum + value;
        if self.sum.abs() >= value.abs() {
            self.compensation += (self.sum - t) + value;
        } else {
            self.compensation += (value - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn total(&self) -> f64 {
        self.sum + self.compensation
    }
}

/// A rational function compiled for repeated floating-point evaluation.
#[derive(Debug, Clone)]
pub struct FieldEvaluator {
    num: CompiledPoly,
    den: CompiledPoly,
}

impl FieldEvaluator {
    pub fn new(f: &RationalFn) -> Self {
        FieldEvaluator {
            num: CompiledPoly::new(f.num()),
            den: CompiledPoly::new(f.den()),
        }
    }

    /// Evaluates the field at `(x, y, s)`.
    ///
    /// Errors with `SingularPoint` when the denominator magnitude falls below
    /// 1e-300; for the verified fields that only happens at the space-time
    /// singularity (0, 0, 0).
    pub fn eval(&self, x: f64, y: f64, s: f64) -> Result<Complex64, NumericsError> {
        let den = self.den.eval(x, y, s);
        if den.norm() < SINGULAR_FLOOR {
            return Err(NumericsError::SingularPoint { x, y, s });
        }
        Ok(self.num.eval(x, y, s) / den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use mnv_solution::build_solution;

    #[test]
    fn matches_the_exact_spot_values() {
        let b = build_solution();
        let u = FieldEvaluator::new(&b.u);
        let got = u.eval(1.0, 0.0, 0.0).unwrap();
        assert!((got.re - (-12.0 / 13.0)).abs() < 1e-15);
        assert_eq!(got.im, 0.0);
        let got = u.eval(1.0, 0.0, 1.0).unwrap();
        assert!((got.re - 0.6).abs() < 1e-15);
    }

    #[test]
    fn reports_the_singular_point() {
        let b = build_solution();
        let u = FieldEvaluator::new(&b.u);
        match u.eval(0.0, 0.0, 0.0) {
            Err(NumericsError::SingularPoint { .. }) => {}
            other => panic!("expected a singular point, got {other:?}"),
        }
    }

    #[test]
    fn evaluation_is_bitwise_reproducible() {
        let b = build_solution();
        let v = FieldEvaluator::new(&b.v);
        let a = v.eval(0.7, -1.3, 0.9).unwrap();
        let again = FieldEvaluator::new(&b.v).eval(0.7, -1.3, 0.9).unwrap();
        assert_eq!(a.re.to_bits(), again.re.to_bits());
        assert_eq!(a.im.to_bits(), again.im.to_bits());
    }

    #[test]
    fn neumaier_recovers_cancelled_low_bits() {
        let mut acc = NeumaierSum::new();
        acc.add(1.0);
        acc.add(1e100);
        acc.add(1.0);
        acc.add(-1e100);
        assert_eq!(acc.total(), 2.0);
    }
}
