//! Failure modes of the exact verifiers.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum SolutionError {
    /// `V_z̄ - (U²)_z` did not expand to the zero function.
    #[error("dbar constraint violated; leading residual term: {leading}")]
    ConstraintViolation { leading: String },

    /// The equation residual did not expand to zero; carries a point where
    /// it evaluates to something nonzero.
    #[error("mNV residual is nonzero at (x, y, s) = ({x}, {y}, {s}); value {value}")]
    ResidualNonzero {
        x: String,
        y: String,
        s: String,
        value: String,
    },

    /// `q - 9(|gamma|² + |delta|²)` did not expand to zero.
    #[error("denominator split identity violated; leading term: {leading}")]
    IdentityViolation { leading: String },

    /// A field that must be self-conjugate is not.
    #[error("field {field} is not real-valued")]
    RealnessViolation { field: &'static str },

    /// One step of the singular-point case analysis failed.
    #[error("singular-point audit failed at step: {step}")]
    AuditFailure { step: String },
}
