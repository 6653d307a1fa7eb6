//! One function per subcommand, each returning what to print and how to
//! exit instead of printing directly, so the whole surface stays testable
//! without spawning processes.

use std::f64::consts::PI;

use mnv_algebra::RationalFn;
use mnv_numerics::{
    decay_probe, integrate_u2, ray_limit_probe, DecayLaw, FieldEvaluator, ProbeSeries,
};
use mnv_solution::build_solution;
use serde::{Deserialize, Serialize};

use crate::expr::{lower_expr, parse_expr, MAX_INPUT_BYTES};
use crate::number::ExactReal;
use crate::output::{grid_cell, shortest, OutputFormat};
use crate::registry::{run_checks, CertRow, CheckKind};

/// What a subcommand wants the process to do: print `stdout` (to the
/// selected sink), echo `stderr` lines, and exit with `exit`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutput {
    pub stdout: String,
    pub stderr: Vec<String>,
    pub exit: u8,
}

impl CommandOutput {
    fn ok(stdout: String) -> Self {
        CommandOutput {
            stdout,
            stderr: Vec::new(),
            exit: 0,
        }
    }

    fn usage(message: String) -> Self {
        CommandOutput {
            stdout: String::new(),
            stderr: vec![message],
            exit: 2,
        }
    }

    fn failed(message: String) -> Self {
        CommandOutput {
            stdout: String::new(),
            stderr: vec![message],
            exit: 1,
        }
    }
}

fn render_cert_rows(rows: &[CertRow], format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let mut text = serde_json::to_string(rows).expect("rows serialize");
            text.push('\n');
            text
        }
        OutputFormat::Csv => {
            let mut text = String::from("check,status,degree,terms,millis\n");
            for row in rows {
                text.push_str(&format!(
                    "{},{},{},{},{}\n",
                    row.check, row.status, row.degree, row.terms, row.millis
                ));
            }
            text
        }
        OutputFormat::Text => {
            let mut text = String::new();
            for row in rows {
                text.push_str(&format!(
                    "{}: {} (degree {}, terms {}, {} ms)\n",
                    row.check, row.status, row.degree, row.terms, row.millis
                ));
            }
            text
        }
    }
}

/// Runs the selected exact certificates. Exit 0 only when every row passed.
pub fn cmd_verify(kind: CheckKind, format: OutputFormat) -> CommandOutput {
    let (rows, failures) = run_checks(kind);
    let exit = if failures.is_empty() { 0 } else { 1 };
    CommandOutput {
        stdout: render_cert_rows(&rows, format),
        stderr: failures,
        exit,
    }
}

/// Everything `integrate` reports, in JSON key order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IntegrateOutcome {
    pub s: f64,
    pub tol: f64,
    pub value: f64,
    pub tail_correction: f64,
    pub inner_estimate_error: f64,
    pub radius_used: f64,
    pub cells: usize,
    /// Which conserved value the result landed on: `2pi` or `3pi`.
    pub verdict: String,
    pub deviation: f64,
}

fn render_integrate(out: &IntegrateOutcome, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let mut text = serde_json::to_string(out).expect("outcome serializes");
            text.push('\n');
            text
        }
        OutputFormat::Csv => format!(
            "s,tol,value,tail_correction,inner_estimate_error,radius_used,cells,verdict,deviation\n{},{},{},{},{},{},{},{},{}\n",
            shortest(out.s),
            shortest(out.tol),
            shortest(out.value),
            shortest(out.tail_correction),
            shortest(out.inner_estimate_error),
            shortest(out.radius_used),
            out.cells,
            out.verdict,
            shortest(out.deviation)
        ),
        OutputFormat::Text => format!(
            "s = {}\ntolerance = {}\nvalue = {}\ntail correction = {}\ninner estimate error = {}\nradius = {}\ncells = {}\nverdict = {} (deviation {})\n",
            shortest(out.s),
            shortest(out.tol),
            shortest(out.value),
            shortest(out.tail_correction),
            shortest(out.inner_estimate_error),
            shortest(out.radius_used),
            out.cells,
            out.verdict,
            shortest(out.deviation)
        ),
    }
}

/// Integrates U² over the plane and names the nearest conserved value.
/// Exit 0 when the result sits within ten tolerances of `2pi` or `3pi`.
pub fn cmd_integrate(s: f64, tol: f64, workers: usize, format: OutputFormat) -> CommandOutput {
    let bundle = build_solution();
    let u = FieldEvaluator::new(&bundle.u);
    let report = match integrate_u2(&u, s, tol, workers) {
        Ok(r) => r,
        Err(e) => return CommandOutput::failed(e.to_string()),
    };
    let two_pi = 2.0 * PI;
    let three_pi = 3.0 * PI;
    let (verdict, reference) = if (report.value - two_pi).abs() <= (report.value - three_pi).abs()
    {
        ("2pi", two_pi)
    } else {
        ("3pi", three_pi)
    };
    let deviation = (report.value - reference).abs();
    let outcome = IntegrateOutcome {
        s: report.s,
        tol: report.tol,
        value: report.value,
        tail_correction: report.tail_correction,
        inner_estimate_error: report.inner_estimate_error,
        radius_used: report.radius_used,
        cells: report.cells,
        verdict: verdict.to_string(),
        deviation,
    };
    let exit = if deviation <= 10.0 * tol { 0 } else { 1 };
    let mut stderr = Vec::new();
    if exit != 0 {
        stderr.push(format!(
            "value {} deviates from {} by {}, more than 10 * tol = {}",
            shortest(outcome.value),
            verdict,
            shortest(deviation),
            shortest(10.0 * tol)
        ));
    }
    CommandOutput {
        stdout: render_integrate(&outcome, format),
        stderr,
        exit,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum ProbeKind {
    /// Approach the singular time slice along a fixed direction.
    Ray,
    /// Follow a ray outward and extrapolate the decay law.
    Decay,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum ProbeField {
    U,
    V,
}

/// A probe run with its reference value, when the theory provides one.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProbeOutcome {
    pub kind: String,
    pub phi: f64,
    pub s: f64,
    pub field: String,
    pub method: String,
    pub abscissae: Vec<f64>,
    pub values: Vec<f64>,
    pub extrapolated_limit: f64,
    pub reference: Option<f64>,
    pub deviation: Option<f64>,
}

fn render_probe(out: &ProbeOutcome, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let mut text = serde_json::to_string(out).expect("outcome serializes");
            text.push('\n');
            text
        }
        OutputFormat::Csv => {
            let mut text = String::from("r,value\n");
            for (r, v) in out.abscissae.iter().zip(&out.values) {
                text.push_str(&format!("{},{}\n", shortest(*r), shortest(*v)));
            }
            text.push_str(&format!("limit,{}\n", shortest(out.extrapolated_limit)));
            if let Some(reference) = out.reference {
                text.push_str(&format!("reference,{}\n", shortest(reference)));
            }
            if let Some(deviation) = out.deviation {
                text.push_str(&format!("deviation,{}\n", shortest(deviation)));
            }
            text
        }
        OutputFormat::Text => {
            let mut text = format!(
                "{} probe of {} at phi = {}, s = {}\n",
                out.kind,
                out.field,
                shortest(out.phi),
                shortest(out.s)
            );
            for (r, v) in out.abscissae.iter().zip(&out.values) {
                text.push_str(&format!("r = {:<12} value = {}\n", shortest(*r), shortest(*v)));
            }
            text.push_str(&format!(
                "extrapolated limit = {} ({})\n",
                shortest(out.extrapolated_limit),
                out.method
            ));
            if let (Some(reference), Some(deviation)) = (out.reference, out.deviation) {
                text.push_str(&format!(
                    "reference = {}\ndeviation = {}\n",
                    shortest(reference),
                    shortest(deviation)
                ));
            }
            text
        }
    }
}

/// Runs a ray or decay probe along the direction `phi`.
///
/// Ray probes are only defined on the singular time slice and only for U,
/// whose limit `-cos 2phi` is the reference; decay probes compare `r²U`
/// against `-3 cos 2phi` and record a boundedness sup for V.
pub fn cmd_probe(
    kind: ProbeKind,
    phi: f64,
    s: f64,
    field: ProbeField,
    format: OutputFormat,
) -> CommandOutput {
    let bundle = build_solution();
    let series: ProbeSeries;
    let reference: Option<f64>;
    match kind {
        ProbeKind::Ray => {
            if s != 0.0 {
                return CommandOutput::usage(format!(
                    "ray probes are defined on the slice s = 0 only (got s = {})",
                    shortest(s)
                ));
            }
            if field != ProbeField::U {
                return CommandOutput::usage(
                    "ray probes target the field U; V has no ray limit to compare".to_string(),
                );
            }
            let u = FieldEvaluator::new(&bundle.u);
            series = match ray_limit_probe(&u, phi) {
                Ok(p) => p,
                Err(e) => return CommandOutput::failed(e.to_string()),
            };
            reference = Some(-(2.0 * phi).cos());
        }
        ProbeKind::Decay => match field {
            ProbeField::U => {
                let u = FieldEvaluator::new(&bundle.u);
                series = match decay_probe(&u, phi, s, DecayLaw::Coefficient) {
                    Ok(p) => p,
                    Err(e) => return CommandOutput::failed(e.to_string()),
                };
                reference = Some(-3.0 * (2.0 * phi).cos());
            }
            ProbeField::V => {
                let v = FieldEvaluator::new(&bundle.v);
                series = match decay_probe(&v, phi, s, DecayLaw::BoundedSup) {
                    Ok(p) => p,
                    Err(e) => return CommandOutput::failed(e.to_string()),
                };
                reference = None;
            }
        },
    }
    let outcome = ProbeOutcome {
        kind: match kind {
            ProbeKind::Ray => "ray".to_string(),
            ProbeKind::Decay => "decay".to_string(),
        },
        phi,
        s,
        field: match field {
            ProbeField::U => "u".to_string(),
            ProbeField::V => "v".to_string(),
        },
        method: series.method.to_string(),
        extrapolated_limit: series.extrapolated_limit,
        deviation: reference.map(|r| (series.extrapolated_limit - r).abs()),
        reference,
        abscissae: series.abscissae,
        values: series.values,
    };
    CommandOutput::ok(render_probe(&outcome, format))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum GridField {
    U,
    V,
    Q,
}

/// A rectangular sampling grid: endpoints are included, so `nx` and `ny`
/// count points, not cells.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub nx: u32,
    pub ny: u32,
    pub xmin: f64,
    pub xmax: f64,
    pub ymin: f64,
    pub ymax: f64,
    pub s: f64,
}

/// Samples a field on an inclusive rectangular grid and emits `x,y,re,im`
/// rows, y-major, with empty value cells at singular points. The output is
/// CSV regardless of `--format`.
pub fn cmd_export(spec: &GridSpec, field: GridField) -> CommandOutput {
    let GridSpec {
        nx,
        ny,
        xmin,
        xmax,
        ymin,
        ymax,
        s,
    } = *spec;
    if nx < 2 || ny < 2 {
        return CommandOutput::usage(format!("grid must be at least 2 x 2 (got {nx} x {ny})"));
    }
    let degenerate = |lo: f64, hi: f64| lo.is_nan() || hi.is_nan() || lo >= hi;
    if degenerate(xmin, xmax) || degenerate(ymin, ymax) {
        return CommandOutput::usage(format!(
            "range must satisfy xmin < xmax and ymin < ymax (got [{}, {}] x [{}, {}])",
            shortest(xmin),
            shortest(xmax),
            shortest(ymin),
            shortest(ymax)
        ));
    }
    let bundle = build_solution();
    let evaluator = match field {
        GridField::U => FieldEvaluator::new(&bundle.u),
        GridField::V => FieldEvaluator::new(&bundle.v),
        GridField::Q => FieldEvaluator::new(&RationalFn::from_poly(bundle.q.clone())),
    };
    let coordinate = |lo: f64, hi: f64, n: u32, k: u32| -> f64 {
        if k == n - 1 {
            hi
        } else {
            lo + (hi - lo) * (k as f64) / ((n - 1) as f64)
        }
    };
    let mut text = String::from("x,y,re,im\n");
    for j in 0..ny {
        let y = coordinate(ymin, ymax, ny, j);
        for i in 0..nx {
            let x = coordinate(xmin, xmax, nx, i);
            match evaluator.eval(x, y, s) {
                Ok(value) => text.push_str(&format!(
                    "{},{},{},{}\n",
                    grid_cell(x),
                    grid_cell(y),
                    grid_cell(value.re),
                    grid_cell(value.im)
                )),
                Err(_) => text.push_str(&format!("{},{},,\n", grid_cell(x), grid_cell(y))),
            }
        }
    }
    CommandOutput::ok(text)
}

fn complex_text(re: f64, im: f64) -> String {
    if im == 0.0 {
        shortest(re)
    } else if im < 0.0 {
        format!("{} - {}*i", shortest(re), shortest(-im))
    } else {
        format!("{} + {}*i", shortest(re), shortest(im))
    }
}

fn named_field(bundle: &mnv_solution::SolutionBundle, name: &str) -> Option<RationalFn> {
    match name {
        "U" => Some(bundle.u.clone()),
        "V" => Some(bundle.v.clone()),
        "Q" => Some(RationalFn::from_poly(bundle.q.clone())),
        "gamma" => Some(RationalFn::from_poly(bundle.gamma.clone())),
        "delta" => Some(RationalFn::from_poly(bundle.delta.clone())),
        _ => None,
    }
}

/// Evaluates an expression, or one of the named fields U, V, Q, gamma,
/// delta, at a point. With `--exact` the coordinates must be rationals and
/// the arithmetic never leaves them.
pub fn cmd_eval(
    expr: &str,
    x: &ExactReal,
    y: &ExactReal,
    s: &ExactReal,
    exact: bool,
    format: OutputFormat,
) -> CommandOutput {
    if expr.len() > MAX_INPUT_BYTES {
        return CommandOutput::usage(format!(
            "expression is {} bytes, over the {} byte cap",
            expr.len(),
            MAX_INPUT_BYTES
        ));
    }
    let bundle = build_solution();
    let f = match named_field(&bundle, expr.trim()) {
        Some(f) => f,
        None => {
            let ast = match parse_expr(expr) {
                Ok(ast) => ast,
                Err(e) => return CommandOutput::usage(e.to_string()),
            };
            match lower_expr(&ast) {
                Ok(f) => f,
                Err(e) => return CommandOutput::failed(e.to_string()),
            }
        }
    };

    if exact {
        let (xq, yq, sq) = match (&x.exact, &y.exact, &s.exact) {
            (Some(a), Some(b), Some(c)) => (a, b, c),
            _ => {
                return CommandOutput::usage(
                    "exact evaluation needs exact coordinates: integers, ratios a/b, or finite decimals"
                        .to_string(),
                )
            }
        };
        let value = match f.eval(xq, yq, sq) {
            Ok(v) => v,
            Err(e) => return CommandOutput::failed(e.to_string()),
        };
        let rendered = match format {
            OutputFormat::Json => {
                let object = serde_json::json!({
                    "expr": expr,
                    "x": x.to_string(),
                    "y": y.to_string(),
                    "s": s.to_string(),
                    "mode": "exact",
                    "re": value.re().to_string(),
                    "im": value.im().to_string(),
                });
                format!("{object}\n")
            }
            OutputFormat::Csv => format!("re,im\n{},{}\n", value.re(), value.im()),
            OutputFormat::Text => format!("{value}\n"),
        };
        return CommandOutput::ok(rendered);
    }

    let evaluator = FieldEvaluator::new(&f);
    let value = match evaluator.eval(x.value, y.value, s.value) {
        Ok(v) => v,
        Err(e) => return CommandOutput::failed(e.to_string()),
    };
    let rendered = match format {
        OutputFormat::Json => {
            let object = serde_json::json!({
                "expr": expr,
                "x": x.value,
                "y": y.value,
                "s": s.value,
                "mode": "float",
                "re": value.re,
                "im": value.im,
            });
            format!("{object}\n")
        }
        OutputFormat::Csv => format!("re,im\n{},{}\n", shortest(value.re), shortest(value.im)),
        OutputFormat::Text => format!("{}\n", complex_text(value.re, value.im)),
    };
    CommandOutput::ok(rendered)
}
