use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{ArgGroup, Parser, ValueEnum};

use parcones::document::parse_document;
use parcones::report::{render_json, render_text, run_report, ReportFlags};
use parcones::runner::{render_corpus_json, render_corpus_text, run_corpus, ExitClass};

/// Computes intersection-ring data, positive cones, and semistability for
/// numerical parabolic bundle data, with an optional cross-check against
/// classical cone formulas on finite covers.
#[derive(Debug, Parser)]
#[command(name = "parcones", version, group(ArgGroup::new("source").required(true)))]
struct Cli {
    /// Analyze a single bundle document.
    #[arg(long, value_name = "PATH", group = "source")]
    input: Option<PathBuf>,

    /// Analyze every *.json document in a directory (concurrently; output
    /// ordered by file name).
    #[arg(long, value_name = "DIR", group = "source")]
    corpus: Option<PathBuf>,

    /// Comma-separated dimensions to report (default: all of 1..rank).
    #[arg(long = "k", value_name = "LIST", value_delimiter = ',')]
    k: Option<Vec<u32>>,

    /// Recompute each reported effective cone through classical formulas on
    /// finite covers and compare.
    #[arg(long)]
    check_oracle: bool,

    /// Comma-separated cover degrees for the oracle (default: the three
    /// smallest admissible ones).
    #[arg(long, value_name = "LIST", value_delimiter = ',', requires = "check_oracle")]
    gammas: Option<Vec<u64>>,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Treat warnings (skipped dimensions, skipped cover degrees) as errors.
    #[arg(long)]
    strict: bool,

    /// Write output to this file instead of stdout.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn write_output(out: &Option<PathBuf>, content: &str) -> Result<(), String> {
    match out {
        Some(path) => fs::write(path, content)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(content.as_bytes())
                .map_err(|e| format!("cannot write to stdout: {e}"))
        }
    }
}

fn run_single(cli: &Cli, path: &PathBuf, flags: &ReportFlags) -> ExitClass {
    let bytes = match fs::read(path) {
        Ok(b) => b,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", path.display());
            return ExitClass::Io;
        }
    };
    let doc = match parse_document(&bytes) {
        Ok(d) => d,
        Err(e) => {
            eprintln!("error: {}: {e}", path.display());
            return ExitClass::Validation;
        }
    };
    let report = match run_report(&doc, flags) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {}: {e}", path.display());
            return ExitClass::Validation;
        }
    };
    if cli.strict && !report.warnings.is_empty() {
        for w in &report.warnings {
            eprintln!("error (strict): {w}");
        }
        return ExitClass::Validation;
    }
    let rendered = match cli.format {
        Format::Text => render_text(&report),
        Format::Json => render_json(&report),
    };
    if let Err(e) = write_output(&cli.out, &rendered) {
        eprintln!("error: {e}");
        return ExitClass::Io;
    }
    match &report.oracle {
        Some(oracle) if !oracle.pass => ExitClass::OracleMismatch,
        _ => ExitClass::Success,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let flags = ReportFlags {
        k_filter: cli.k.clone(),
        check_oracle: cli.check_oracle,
        gammas: cli.gammas.clone(),
    };

    let exit = if let Some(path) = &cli.input {
        run_single(&cli, path, &flags)
    } else {
        let dir = cli.corpus.as_ref().expect("clap enforces one source");
        let started = Instant::now();
        let (summary, mut exit) = run_corpus(dir, &flags, cli.strict);
        let rendered = match cli.format {
            Format::Text => render_corpus_text(&summary, started.elapsed()),
            Format::Json => render_corpus_json(&summary),
        };
        if let Err(e) = write_output(&cli.out, &rendered) {
            eprintln!("error: {e}");
            exit = exit.combined(ExitClass::Io);
        }
        exit
    };

    ExitCode::from(u8::try_from(exit.code()).unwrap_or(1))
}
