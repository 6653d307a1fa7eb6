//! Argument parsing and dispatch for the `mnv` binary.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use mnv_cli::{
    cmd_eval, cmd_export, cmd_integrate, cmd_probe, cmd_verify, CheckKind, CommandOutput,
    ExactReal, GridField, GridSpec, OutputFormat, ProbeField, ProbeKind,
};

#[derive(Parser)]
#[command(
    name = "mnv",
    version,
    about = "Exact and numerical checks for a one-point-singular mNV solution"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run exact certificates for the defining identities.
    Verify {
        /// Which certificate(s) to run.
        #[arg(long, value_enum, default_value = "all")]
        check: CheckKind,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Integrate U^2 over the plane and name the nearest conserved value.
    Integrate {
        /// Time slice, entered through s = C - t.
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        s: ExactReal,
        /// Requested accuracy of the quadrature (floor 1e-8).
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        /// Worker threads for the quadrature cells.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        workers: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sample a field along a ray and extrapolate its limit behaviour.
    Probe {
        #[arg(value_enum)]
        kind: ProbeKind,
        /// Direction angle in radians.
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        phi: f64,
        /// Time slice, entered through s = C - t. Ray probes require 0.
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        s: ExactReal,
        #[arg(long, value_enum, default_value = "u", ignore_case = true)]
        field: ProbeField,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sample a field on a rectangular grid as x,y,re,im rows.
    Export {
        /// Grid points along x (at least 2, endpoints included).
        #[arg(long)]
        nx: u32,
        /// Grid points along y (at least 2, endpoints included).
        #[arg(long)]
        ny: u32,
        #[arg(long, allow_hyphen_values = true)]
        xmin: f64,
        #[arg(long, allow_hyphen_values = true)]
        xmax: f64,
        #[arg(long, allow_hyphen_values = true)]
        ymin: f64,
        #[arg(long, allow_hyphen_values = true)]
        ymax: f64,
        /// Time slice, entered through s = C - t.
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        s: ExactReal,
        #[arg(long, value_enum, default_value = "u", ignore_case = true)]
        field: GridField,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate an expression or a named field (U, V, Q, gamma, delta).
    Eval {
        /// Expression in x, y, s, i, or a field name.
        #[arg(long)]
        expr: String,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        x: ExactReal,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        y: ExactReal,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        s: ExactReal,
        /// Evaluate over exact rationals; coordinates must be exact.
        #[arg(long)]
        exact: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn run(cmd: Cmd) -> (CommandOutput, Option<PathBuf>) {
    match cmd {
        Cmd::Verify { check, format, out } => (cmd_verify(check, format), out),
        Cmd::Integrate {
            s,
            tol,
            workers,
            format,
            out,
        } => (cmd_integrate(s.value, tol, workers as usize, format), out),
        Cmd::Probe {
            kind,
            phi,
            s,
            field,
            format,
            out,
        } => (cmd_probe(kind, phi, s.value, field, format), out),
        Cmd::Export {
            nx,
            ny,
            xmin,
            xmax,
            ymin,
            ymax,
            s,
            field,
            out,
        } => {
            let spec = GridSpec {
                nx,
                ny,
                xmin,
                xmax,
                ymin,
                ymax,
                s: s.value,
            };
            (cmd_export(&spec, field), out)
        }
        Cmd::Eval {
            expr,
            x,
            y,
            s,
            exact,
            format,
            out,
        } => (cmd_eval(&expr, &x, &y, &s, exact, format), out),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (output, out_path) = run(cli.command);
    match out_path {
        Some(path) => {
            if let Err(e) = std::fs::write(&path, output.stdout.as_bytes()) {
                eprintln!("cannot write {}: {e}", path.display());
                return ExitCode::from(1);
            }
        }
        None => {
            print!("{}", output.stdout);
            let _ = std::io::stdout().flush();
        }
    }
    for line in &output.stderr {
        eprintln!("{line}");
    }
    ExitCode::from(output.exit)
}
