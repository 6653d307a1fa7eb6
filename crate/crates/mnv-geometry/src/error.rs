//! Failure modes of the geometric certificates.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum GeometryError {
    /// `E - G` or `F` is not the zero function.
    #[error("conformality violated ({quantity}) at witness ({x}, {y}, {s}): {value}")]
    ConformalityViolation {
        quantity: &'static str,
        x: String,
        y: String,
        s: String,
        value: String,
    },

    /// `16 U² g³ - ⟨Δr, w⟩²` did not expand to zero.
    #[error("potential identity violated; leading term: {leading}")]
    PotentialMismatch { leading: String },

    /// The sampled orientation sign was not constant.
    #[error("sign probe disagrees with itself: {detail}")]
    SignInconsistency { detail: String },
}
