use thiserror::Error;

/// Failures of the floating-point layer.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum NumericsError {
    /// The denominator magnitude dropped below 1e-300 at the requested point,
    /// so the quotient is not representable.
    #[error("denominator vanishes at ({x}, {y}, {s})")]
    SingularPoint { x: f64, y: f64, s: f64 },

    /// Refinement stalled (or the request was below the supported floor)
    /// before the error estimate reached the requested tolerance.
    #[error("tolerance {requested:e} not met (achieved {achieved:e})")]
    ToleranceNotMet { achieved: f64, requested: f64 },

    /// An input violated a documented precondition.
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
}
