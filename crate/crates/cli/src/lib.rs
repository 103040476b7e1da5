//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure (the report is still
//! printed), 2 usage or domain error.

use std::io::Write;

use adpow_core::checks::verify_combinatorics;
use adpow_core::coefficients::{coefficient_row, decomposition_table};
use adpow_core::combinatorics::{
    derangements, egf_coefficients, EulerTable, HigherDerangementTable,
};
use adpow_core::lie::{verify_stable_decomposition, Rank};
use adpow_core::render::{
    derangement_grid, euler_grid, higher_grid, render_row, render_table, series_grid, to_json_text,
    Format,
};
use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "adpow",
    version,
    about = "Decomposition coefficients of tensor powers of the A_n adjoint representation"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TableFormat {
    Markdown,
    Csv,
    Json,
}

impl From<TableFormat> for Format {
    fn from(f: TableFormat) -> Self {
        match f {
            TableFormat::Markdown => Format::Markdown,
            TableFormat::Csv => Format::Csv,
            TableFormat::Json => Format::Json,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TableKind {
    /// Euler's difference table e_k^j
    Euler,
    /// Derangement numbers d_k
    Derangement,
    /// Higher derangement numbers d_n^k
    Higher,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print one of the combinatorial tables for indices 0..=MAX
    Table {
        kind: TableKind,
        #[arg(long)]
        max: u32,
        #[arg(long, value_enum, default_value = "markdown")]
        format: TableFormat,
    },
    /// Print the coefficients c_j^k of one power (--k) or of powers 1..=K (--upto)
    #[command(group(ArgGroup::new("which").required(true).args(["k", "upto"])))]
    Coeffs {
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        upto: Option<u32>,
        #[arg(long, value_enum, default_value = "markdown")]
        format: TableFormat,
    },
    /// Print the coefficients of e^{-x} / (1-x)^{k+1} up to x^ORDER
    Series {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        order: u32,
        #[arg(long, value_enum, default_value = "markdown")]
        format: TableFormat,
    },
    /// Run a verification suite
    Verify {
        #[command(subcommand)]
        suite: Suite,
    },
}

#[derive(Debug, Subcommand)]
enum Suite {
    /// Cross-check every combinatorial formula for indices up to MAX
    Combinatorics {
        #[arg(long)]
        max: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
    },
    /// Certify the decomposition of ad^k for k <= KMAX at rank N (needs 2 KMAX <= N + 1)
    Oracle {
        #[arg(long)]
        kmax: u32,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
    },
}

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command, err) {
        Ok((text, code)) => {
            if out.write_all(text.as_bytes()).is_err() {
                return EXIT_USAGE;
            }
            code
        }
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn execute(command: Command, err: &mut dyn Write) -> Result<(String, i32), String> {
    let text = match command {
        Command::Table { kind, max, format } => {
            let grid = match kind {
                TableKind::Euler => euler_grid(&EulerTable::new(max)),
                TableKind::Derangement => derangement_grid(&derangements(max)),
                TableKind::Higher => higher_grid(&HigherDerangementTable::new(max)),
            };
            grid.render(format.into())
        }
        Command::Coeffs { k, upto, format } => match (k, upto) {
            (Some(k), None) => render_row(&coefficient_row(k), format.into()),
            (None, Some(upto)) => render_table(&decomposition_table(upto), format.into()),
            _ => return Err("exactly one of --k and --upto is required".into()),
        },
        Command::Series { k, order, format } => {
            series_grid(&egf_coefficients(k, order)).render(format.into())
        }
        Command::Verify { suite } => return verify(suite, err),
    };
    Ok((text, EXIT_OK))
}

fn verify(suite: Suite, err: &mut dyn Write) -> Result<(String, i32), String> {
    let (text, pass) = match suite {
        Suite::Combinatorics { max, format } => {
            let report = verify_combinatorics(max);
            let text = match format {
                ReportFormat::Text => report.to_text(),
                ReportFormat::Json => to_json_text(&report.to_json()),
            };
            (text, report.pass())
        }
        Suite::Oracle { kmax, n, format } => {
            let rank = Rank::new(n).map_err(|e| e.to_string())?;
            let report = verify_stable_decomposition(kmax, rank).map_err(|e| e.to_string())?;
            let _ = writeln!(err, "oracle run took {:.3?}", report.elapsed);
            let text = match format {
                ReportFormat::Text => report.to_text(),
                ReportFormat::Json => to_json_text(&report.to_json()),
            };
            (text, report.pass)
        }
    };
    let code = if pass {
        EXIT_OK
    } else {
        EXIT_VERIFICATION_FAILED
    };
    Ok((text, code))
}
