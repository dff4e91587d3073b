//! `bridgepants`: invariants of 2-bridge knots from the command line.
//!
//! Knots are named by a slope `p/q` (or the literal `unknot`); the tool
//! normalizes the fraction, walks the Farey graph, and reports continued
//! fractions, pants/dual distances, bridge and pants complexities, the double
//! branched cover, and two-sided hyperbolic volume bounds. Curve-complex
//! windows can be exported as DOT or JSON, and batch files of slopes are
//! processed into JSON-lines.

mod graph;
mod query;
mod report;

use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use bridgepants::pantscomplex::{ComplexKind, SurfaceKind};
use bridgepants::volume::BoundSource;

/// Exit codes: 2 parse/usage/IO error, 3 two-component link, 4 volume bounds
/// requested for a non-hyperbolic knot, 5 bound above the configured
/// maximum, 1 write failure (and batch runs with failed lines).
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Link(String),
    #[error("{0}")]
    NotHyperbolic(String),
    #[error("{0}")]
    BoundExceeded(String),
    #[error("cannot read {path}: {source}")]
    Read { path: String, source: io::Error },
    #[error("cannot write output: {0}")]
    Write(#[from] io::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_) | CliError::Read { .. } => 2,
            CliError::Link(_) => 3,
            CliError::NotHyperbolic(_) => 4,
            CliError::BoundExceeded(_) => 5,
            CliError::Write(_) => 1,
        }
    }
}

#[derive(Parser)]
#[command(
    name = "bridgepants",
    version,
    about = "Invariants of 2-bridge knots: normal forms, Farey distances, complexities, volume bounds"
)]
struct Cli {
    /// Print the JSON schema for invariant reports and exit.
    #[arg(long)]
    schema: bool,
    /// Suppress informational messages on stderr.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand)]
enum Command {
    /// Full invariant report for one slope, as pretty-printed JSON.
    Invariants {
        #[arg(allow_hyphen_values = true)]
        slope: String,
    },
    /// Canonical continued fraction of the normal-form slope.
    Cf {
        #[arg(allow_hyphen_values = true)]
        slope: String,
    },
    /// Pants and dual-curve distances of the standard (0,2)-splitting.
    Distance {
        #[arg(allow_hyphen_values = true)]
        slope: String,
    },
    /// Two-sided hyperbolic volume bounds.
    Bounds {
        #[arg(allow_hyphen_values = true)]
        slope: String,
        /// Restrict the report to one family of bounds.
        #[arg(long, value_enum)]
        via: Option<ViaArg>,
    },
    /// Double branched cover of the knot (a lens space).
    Cover {
        #[arg(allow_hyphen_values = true)]
        slope: String,
    },
    /// Export a bounded window of a curve complex.
    Graph {
        /// Surface carrying the curves.
        #[arg(long, value_enum)]
        surface: SurfaceArg,
        /// Which complex to build on that surface.
        #[arg(long, value_enum)]
        complex: ComplexArg,
        /// Keep slopes p/q with |p| <= bound and q <= bound, plus 1/0.
        #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
        bound: i64,
        /// Output format.
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
    },
    /// Process a file of slopes (one per line, '#' comments) into JSON-lines.
    Batch { path: PathBuf },
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum SurfaceArg {
    /// The 4-punctured sphere (pillowcase bridge surface).
    S04,
    /// The once-punctured torus.
    S11,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum ComplexArg {
    /// Edges join slopes whose curves meet minimally (Farey edges).
    Pants,
    /// Edges join any two distinct slopes.
    Dual,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Dot,
    Json,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum ViaArg {
    Twist,
    Pants,
}

impl From<SurfaceArg> for SurfaceKind {
    fn from(s: SurfaceArg) -> SurfaceKind {
        match s {
            SurfaceArg::S04 => SurfaceKind::FourPuncturedSphere,
            SurfaceArg::S11 => SurfaceKind::OncePuncturedTorus,
        }
    }
}

impl From<ComplexArg> for ComplexKind {
    fn from(c: ComplexArg) -> ComplexKind {
        match c {
            ComplexArg::Pants => ComplexKind::Pants,
            ComplexArg::Dual => ComplexKind::DualCurve,
        }
    }
}

impl From<ViaArg> for BoundSource {
    fn from(v: ViaArg) -> BoundSource {
        match v {
            ViaArg::Twist => BoundSource::Twist,
            ViaArg::Pants => BoundSource::Pants,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.schema {
        print!("{}", include_str!("../schema/report.schema.json"));
        return ExitCode::SUCCESS;
    }
    let Some(command) = cli.command else {
        eprintln!("error: a subcommand is required (see --help)");
        return ExitCode::from(2);
    };
    match run(command, cli.quiet) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(command: Command, quiet: bool) -> Result<ExitCode, CliError> {
    match command {
        Command::Invariants { slope } => {
            let knot = query::parse_query(&slope)?;
            print_pretty(&report::build_report(&slope, &knot))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Cf { slope } => {
            let knot = query::parse_query(&slope)?;
            print_pretty(&report::cf_output(&slope, &knot))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Distance { slope } => {
            let knot = query::parse_query(&slope)?;
            print_pretty(&report::distance_output(&slope, &knot))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Bounds { slope, via } => {
            let knot = query::parse_query(&slope)?;
            let out = report::bounds_output(&slope, &knot, via.map(BoundSource::from))
                .map_err(|e| CliError::NotHyperbolic(e.to_string()))?;
            print_pretty(&out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Cover { slope } => {
            let knot = query::parse_query(&slope)?;
            print_pretty(&report::cover_output(&slope, &knot))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Graph {
            surface,
            complex,
            bound,
            format,
        } => {
            graph::run(surface.into(), complex.into(), bound, format)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Batch { path } => batch(&path, quiet),
    }
}

fn print_pretty<T: serde::Serialize>(value: &T) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value).expect("reports serialize to JSON");
    writeln!(io::stdout().lock(), "{text}")?;
    Ok(())
}

fn batch(path: &Path, quiet: bool) -> Result<ExitCode, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.display().to_string(),
        source,
    })?;
    let stdout = io::stdout().lock();
    let mut out = BufWriter::new(stdout);
    let mut succeeded = 0u64;
    let mut failed = 0u64;
    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let json = match query::parse_query(trimmed) {
            Ok(knot) => {
                succeeded += 1;
                serde_json::to_string(&report::BatchReport {
                    line,
                    report: report::build_report(trimmed, &knot),
                })
            }
            Err(e) => {
                failed += 1;
                serde_json::to_string(&report::BatchError {
                    line,
                    error: e.to_string(),
                })
            }
        }
        .expect("batch lines serialize to JSON");
        writeln!(out, "{json}")?;
    }
    out.flush()?;
    if !quiet {
        eprintln!("batch: {succeeded} report(s), {failed} error(s)");
    }
    Ok(if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
