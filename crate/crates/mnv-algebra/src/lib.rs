//! Exact computer-algebra kernel for the verification workbench.
//!
//! Everything in this crate is exact: coefficients are Gaussian rationals
//! (arbitrary-precision rational real and imaginary parts), polynomials are
//! sparse term maps in the three real variables `x`, `y`, `s`, and rational
//! functions are unreduced quotients of such polynomials. The time variable
//! enters only through the shift `s = C - t`, so a time derivative is the
//! negated `s` derivative and no symbolic constant is ever needed.
//!
//! Design ground rules, shared by every type here:
//!
//! * no floating point and no rounding, ever;
//! * canonical forms are cheap: term maps drop explicit zeros, quotients are
//!   normalized by joint content and a denominator sign rule, and equality of
//!   quotients is decided by cross-multiplication rather than GCD;
//! * the monomial order is fixed (graded lexicographic with `x > y > s`) and
//!   every iteration, normalization and evaluation walks terms in that order,
//!   which keeps downstream reports deterministic.
//!
//! The [`FactoredRational`] type is the workhorse for large identities: it
//! keeps denominators as factor-power lists so that repeated quotient-rule
//! differentiation never expands a denominator product, which is the
//! difference between a residual numerator of degree ~50 and one of degree
//! several hundred.

pub mod error;
pub mod factored;
pub mod gauss;
pub mod monomial;
pub mod poly;
pub mod ratfn;

pub use error::AlgebraError;
pub use factored::FactoredRational;
pub use gauss::GaussRational;
pub use monomial::{Monomial, Var};
pub use poly::SparsePoly;
pub use ratfn::{DiffVar, RationalFn, ZeroCertificate};
