//! Output format selection shared by every subcommand.

use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Text,
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            OutputFormat::Json => "json",
            OutputFormat::Csv => "csv",
            OutputFormat::Text => "text",
        };
        f.write_str(name)
    }
}

/// Formats an f64 with the shortest decimal string that round-trips, the
/// same rendering serde_json uses, so text, CSV, and JSON agree byte for
/// byte on every float.
pub fn shortest(x: f64) -> String {
    let mut buffer = ryu::Buffer::new();
    buffer.format(x).to_string()
}

/// Fixed-width scientific form used for grid exports, chosen so the printed
/// value always round-trips to the same bits.
pub fn grid_cell(x: f64) -> String {
    format!("{x:.16e}")
}
