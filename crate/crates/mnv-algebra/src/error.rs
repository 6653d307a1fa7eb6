//! Error type shared by the kernel operations.

use thiserror::Error;

/// Errors produced by kernel constructors and field operations.
///
/// The kernel is total on polynomials; only quotient construction, division
/// and point evaluation can fail.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    /// A rational function was constructed with the zero polynomial below
    /// the line.
    #[error("denominator is the zero polynomial")]
    ZeroDenominator,
    /// Division by the zero rational function.
    #[error("division by the zero rational function")]
    DivisionByZeroFunction,
    /// Exact evaluation hit a point where the denominator vanishes.
    #[error("evaluation at a pole: denominator vanishes at ({x}, {y}, {s})")]
    EvalAtPole { x: String, y: String, s: String },
}
