//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when verification finds a mismatch, 2 on
//! usage or I/O errors.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use ulrich_core::hj::{GroupParams, HjExpansion};
use ulrich_core::{oracle, quiver};

use ulrich_cli::{census, document};

#[derive(Parser)]
#[command(
    name = "ulrich",
    version,
    about = "Classify maximal Cohen-Macaulay modules over cyclic quotient surface singularities 1/n(1,a)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify every indecomposable module of 1/n(1,a).
    Analyze {
        n: i64,
        a: i64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Cross-check the classification against the brute-force monomial oracle.
    Verify { n: i64, a: i64 },
    /// Verify every coprime pair with 2 <= n <= nmax and write a CSV summary.
    Census {
        #[arg(long)]
        nmax: i64,
        /// Output path; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the AR quiver or the dual resolution graph as DOT text.
    Export {
        n: i64,
        a: i64,
        #[arg(value_enum)]
        target: ExportTarget,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ExportTarget {
    Quiver,
    Dualgraph,
}

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn validated(n: i64, a: i64) -> Result<GroupParams, ExitCode> {
    GroupParams::new(n, a).map_err(|err| {
        eprintln!("error: {err}");
        ExitCode::from(EXIT_USAGE)
    })
}

fn write_output(path: &Path, contents: &str) -> Result<(), ExitCode> {
    std::fs::write(path, contents).map_err(|err| {
        eprintln!("error: cannot write {}: {err}", path.display());
        ExitCode::from(EXIT_USAGE)
    })
}

fn analyze(n: i64, a: i64, format: Format) -> Result<ExitCode, ExitCode> {
    let g = validated(n, a)?;
    let doc = document::build(&HjExpansion::new(g));
    match format {
        Format::Text => print!("{}", document::render_text(&doc)),
        Format::Json => {
            let json = serde_json::to_string_pretty(&doc).expect("document serializes");
            println!("{json}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn verify(n: i64, a: i64) -> Result<ExitCode, ExitCode> {
    let g = validated(n, a)?;
    let report = oracle::cross_check(&g);
    print!("{report}");
    if report.passed() {
        println!();
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(EXIT_MISMATCH))
    }
}

fn run_census(nmax: i64, out: Option<PathBuf>) -> Result<ExitCode, ExitCode> {
    if !(2..=10_000).contains(&nmax) {
        eprintln!("error: --nmax must lie in [2, 10000], got {nmax}");
        return Err(ExitCode::from(EXIT_USAGE));
    }
    let outcome = census::run(nmax);
    match &out {
        Some(path) => write_output(path, &outcome.csv)?,
        None => print!("{}", outcome.csv),
    }
    eprintln!(
        "census: {} pairs up to n = {nmax}, {}",
        outcome.pairs,
        if outcome.all_passed { "all passed" } else { "FAILURES found" }
    );
    if outcome.all_passed {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(EXIT_MISMATCH))
    }
}

fn export(n: i64, a: i64, target: ExportTarget, out: PathBuf) -> Result<ExitCode, ExitCode> {
    let g = validated(n, a)?;
    let text = match target {
        ExportTarget::Quiver => quiver::quiver_to_dot(&quiver::build_ar_quiver(&g)),
        ExportTarget::Dualgraph => {
            quiver::dual_graph_to_dot(&HjExpansion::new(g).dual_graph())
        }
    };
    write_output(&out, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let result = match Cli::parse().command {
        Command::Analyze { n, a, format } => analyze(n, a, format),
        Command::Verify { n, a } => verify(n, a),
        Command::Census { nmax, out } => run_census(nmax, out),
        Command::Export { n, a, target, out } => export(n, a, target, out),
    };
    match result {
        Ok(code) | Err(code) => code,
    }
}
