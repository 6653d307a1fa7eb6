//! Command-line front end for the verified solution: exact certificate runs,
//! the conserved-integral quadrature, asymptotic probes, grid exports for
//! plotting, and ad-hoc evaluation of user-entered expressions.
//!
//! All machinery lives in the library crates; this one only parses flags,
//! orchestrates, and serializes. Exit codes follow the usual contract:
//! 0 when every requested check passes, 1 when a check or computation fails,
//! 2 for usage and parse errors.

pub mod commands;
pub mod expr;
pub mod number;
pub mod output;
pub mod registry;

pub use commands::{
    cmd_eval, cmd_export, cmd_integrate, cmd_probe, cmd_verify, CommandOutput, GridField,
    GridSpec, ProbeField, ProbeKind,
};
pub use expr::{lower_expr, parse_expr, print_expr, ExprAst, ParseError};
pub use number::ExactReal;
pub use output::OutputFormat;
pub use registry::{run_checks, CertRow, CheckKind};
