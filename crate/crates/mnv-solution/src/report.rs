//! Outcome record shared by all verification operations.

use mnv_algebra::ZeroCertificate;

/// What a verifier proved, plus enough telemetry to see how hard it worked.
///
/// `certificate` describes the polynomial whose vanishing was asserted.
/// `peak_terms` and `peak_degree` track the largest intermediate numerator
/// that appeared while assembling it, which is the honest cost measure for
/// exact arithmetic.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub check: &'static str,
    pub passed: bool,
    pub certificate: ZeroCertificate,
    pub peak_terms: usize,
    pub peak_degree: u32,
    /// Human-readable audit trail, one step per line.
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub(crate) fn ok(check: &'static str, certificate: ZeroCertificate) -> Self {
        VerificationReport {
            check,
            passed: true,
            certificate,
            peak_terms: certificate.num_terms,
            peak_degree: certificate.num_degree,
            notes: Vec::new(),
        }
    }
}
