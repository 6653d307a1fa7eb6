//! The named certificates behind `verify`, run on demand.
//!
//! Each name maps to one exact check; `geometry` fans out to the conformal
//! and potential certificates and `all` runs everything in a fixed order so
//! reports diff cleanly between runs.

use std::time::Instant;

use mnv_geometry::{
    enneper_immersion, fundamental_form, invert_immersion, verify_conformal,
    verify_potential_matches_u, FundamentalForm, Immersion,
};
use mnv_solution::{
    build_solution, singular_point_audit, verify_dbar_constraint, verify_denominator_identity,
    verify_mnv, verify_realness, SolutionBundle, VerificationReport,
};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum CheckKind {
    /// The full equation residual, expanded to the zero polynomial.
    Pde,
    /// The constraint tying V to U.
    Dbar,
    /// The denominator split into squared moduli.
    Denominator,
    /// Self-conjugacy of U.
    Realness,
    /// Conformality plus the potential identity for both immersions.
    Geometry,
    /// The single-zero audit of the shared denominator.
    Singularity,
    /// Every certificate above, in a fixed order.
    All,
}

/// One line of a verification report. Field order is the JSON key order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertRow {
    pub check: String,
    pub status: String,
    pub degree: u32,
    pub terms: usize,
    pub millis: u64,
}

fn expand(kind: CheckKind) -> Vec<&'static str> {
    match kind {
        CheckKind::Pde => vec!["pde"],
        CheckKind::Dbar => vec!["dbar"],
        CheckKind::Denominator => vec!["denominator"],
        CheckKind::Realness => vec!["realness"],
        CheckKind::Geometry => vec!["conformal", "potential"],
        CheckKind::Singularity => vec!["singularity"],
        CheckKind::All => vec![
            "pde",
            "dbar",
            "denominator",
            "realness",
            "conformal",
            "potential",
            "singularity",
        ],
    }
}

/// Geometry objects are shared between the conformal and potential rows;
/// building them once keeps `--check all` from paying the inversion twice.
struct GeometryData {
    enneper_ff: FundamentalForm,
    inverted: Immersion,
    inverted_ff: FundamentalForm,
}

struct Workbench {
    bundle: SolutionBundle,
    geometry: Option<GeometryData>,
}

impl Workbench {
    fn new() -> Self {
        Workbench {
            bundle: build_solution(),
            geometry: None,
        }
    }

    fn geometry(&mut self) -> &GeometryData {
        self.geometry.get_or_insert_with(|| {
            let enneper = enneper_immersion();
            let inverted = invert_immersion(&enneper);
            GeometryData {
                enneper_ff: fundamental_form(&enneper),
                inverted_ff: fundamental_form(&inverted),
                inverted,
            }
        })
    }
}

enum Outcome {
    Pass { degree: u32, terms: usize },
    Fail(String),
}

fn from_report(r: Result<VerificationReport, mnv_solution::SolutionError>) -> Outcome {
    match r {
        Ok(report) => Outcome::Pass {
            degree: report.peak_degree,
            terms: report.peak_terms,
        },
        Err(e) => Outcome::Fail(e.to_string()),
    }
}

fn run_one(name: &str, bench: &mut Workbench) -> Outcome {
    match name {
        "pde" => from_report(verify_mnv(&bench.bundle)),
        "dbar" => from_report(verify_dbar_constraint(&bench.bundle)),
        "denominator" => from_report(verify_denominator_identity(&bench.bundle)),
        "realness" => from_report(verify_realness(&bench.bundle)),
        "singularity" => from_report(singular_point_audit(&bench.bundle)),
        "conformal" => {
            let geo = bench.geometry();
            let planar = match verify_conformal(&geo.enneper_ff) {
                Ok(c) => c,
                Err(e) => return Outcome::Fail(format!("enneper: {e}")),
            };
            let curved = match verify_conformal(&geo.inverted_ff) {
                Ok(c) => c,
                Err(e) => return Outcome::Fail(format!("inverted: {e}")),
            };
            let degree = planar
                .e_minus_g
                .num_degree
                .max(planar.f.num_degree)
                .max(curved.e_minus_g.num_degree)
                .max(curved.f.num_degree);
            let terms = planar
                .e_minus_g
                .num_terms
                .max(planar.f.num_terms)
                .max(curved.e_minus_g.num_terms)
                .max(curved.f.num_terms);
            Outcome::Pass { degree, terms }
        }
        "potential" => {
            bench.geometry();
            let geo = bench.geometry.as_ref().expect("just built");
            match verify_potential_matches_u(&geo.inverted, &geo.inverted_ff, &bench.bundle) {
                Ok(report) => Outcome::Pass {
                    degree: report.potential_certificate.num_degree,
                    terms: report.potential_certificate.num_terms,
                },
                Err(e) => Outcome::Fail(e.to_string()),
            }
        }
        other => Outcome::Fail(format!("unknown check `{other}`")),
    }
}

/// Runs the certificates selected by `kind` and returns one row per check
/// plus a human-readable line for every failure.
pub fn run_checks(kind: CheckKind) -> (Vec<CertRow>, Vec<String>) {
    let mut bench = Workbench::new();
    let mut rows = Vec::new();
    let mut failures = Vec::new();
    for name in expand(kind) {
        let start = Instant::now();
        let outcome = run_one(name, &mut bench);
        let millis = start.elapsed().as_millis() as u64;
        let (status, degree, terms) = match outcome {
            Outcome::Pass { degree, terms } => ("pass", degree, terms),
            Outcome::Fail(why) => {
                failures.push(format!("{name}: {why}"));
                ("fail", 0, 0)
            }
        };
        rows.push(CertRow {
            check: name.to_string(),
            status: status.to_string(),
            degree,
            terms,
            millis,
        });
    }
    (rows, failures)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cheap_checks_pass_with_telemetry() {
        let (rows, failures) = run_checks(CheckKind::Denominator);
        assert!(failures.is_empty());
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].check, "denominator");
        assert_eq!(rows[0].status, "pass");
        assert!(rows[0].terms > 0);
    }

    #[test]
    fn all_expands_to_seven_fixed_rows() {
        assert_eq!(
            expand(CheckKind::All),
            vec![
                "pde",
                "dbar",
                "denominator",
                "realness",
                "conformal",
                "potential",
                "singularity"
            ]
        );
        assert_eq!(expand(CheckKind::Geometry), vec!["conformal", "potential"]);
    }

    #[test]
    fn rows_round_trip_through_json() {
        let row = CertRow {
            check: "dbar".into(),
            status: "pass".into(),
            degree: 24,
            terms: 1201,
            millis: 7,
        };
        let text = serde_json::to_string(&row).unwrap();
        assert!(text.starts_with("{\"check\""));
        let back: CertRow = serde_json::from_str(&text).unwrap();
        assert_eq!(back, row);
    }
}
