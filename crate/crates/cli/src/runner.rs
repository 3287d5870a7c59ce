//! Batch execution over a directory of bundle documents. Files are
//! processed concurrently but reported in name order, so the output is
//! deterministic regardless of scheduling.

use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::document::parse_document;
use crate::report::{run_report, ConeReport, ReportError, ReportFlags};

/// Outcome class of a whole invocation, ordered by reporting precedence:
/// an I/O failure outranks a validation failure, which outranks an oracle
/// mismatch.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitClass {
    Success,
    OracleMismatch,
    Validation,
    Io,
}

impl ExitClass {
    pub fn code(self) -> i32 {
        match self {
            ExitClass::Success => 0,
            ExitClass::Validation => 1,
            ExitClass::OracleMismatch => 2,
            ExitClass::Io => 3,
        }
    }

    fn severity(self) -> u8 {
        match self {
            ExitClass::Success => 0,
            ExitClass::OracleMismatch => 1,
            ExitClass::Validation => 2,
            ExitClass::Io => 3,
        }
    }

    /// Combines two outcomes, keeping the one that must win the exit code.
    pub fn combined(self, other: ExitClass) -> ExitClass {
        if other.severity() > self.severity() {
            other
        } else {
            self
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IssueKind {
    Io,
    Validation,
}

/// A file that produced no report, with the reason.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FileIssue {
    pub file: String,
    pub kind: IssueKind,
    pub detail: String,
}

/// Aggregate over a corpus directory. Reports appear in file-name order.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CorpusSummary {
    pub schema_version: u32,
    pub directory: String,
    pub files: usize,
    pub succeeded: usize,
    pub semistable: usize,
    pub unstable: usize,
    /// Number of reports carrying an oracle section, and how many of those
    /// passed every check.
    pub oracle_checked: usize,
    pub oracle_passed: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub issues: Vec<FileIssue>,
    pub reports: Vec<ConeReport>,
}

enum FileOutcome {
    Report(Box<ConeReport>),
    Issue(IssueKind, String),
}

fn classify_report_error(e: &ReportError) -> IssueKind {
    match e {
        ReportError::Document(_) | ReportError::Model(_) | ReportError::Unrepresentable(_) => {
            IssueKind::Validation
        }
    }
}

fn process_file(path: &Path, flags: &ReportFlags, strict: bool) -> FileOutcome {
    let bytes = match fs::read(path) {
        Ok(b) => b,
        Err(e) => return FileOutcome::Issue(IssueKind::Io, e.to_string()),
    };
    let doc = match parse_document(&bytes) {
        Ok(d) => d,
        Err(e) => return FileOutcome::Issue(IssueKind::Validation, e.to_string()),
    };
    match run_report(&doc, flags) {
        Ok(report) => {
            if strict && !report.warnings.is_empty() {
                FileOutcome::Issue(
                    IssueKind::Validation,
                    format!(
                        "warnings escalated by --strict: {}",
                        report.warnings.join("; ")
                    ),
                )
            } else {
                FileOutcome::Report(Box::new(report))
            }
        }
        Err(e) => FileOutcome::Issue(classify_report_error(&e), e.to_string()),
    }
}

/// Runs every `*.json` document under `dir` and aggregates the results.
/// Unreadable or invalid files are recorded individually; the batch never
/// aborts early.
pub fn run_corpus(dir: &Path, flags: &ReportFlags, strict: bool) -> (CorpusSummary, ExitClass) {
    let mut summary = CorpusSummary {
        schema_version: crate::document::SCHEMA_VERSION,
        directory: dir.display().to_string(),
        files: 0,
        succeeded: 0,
        semistable: 0,
        unstable: 0,
        oracle_checked: 0,
        oracle_passed: 0,
        issues: Vec::new(),
        reports: Vec::new(),
    };

    let entries = match fs::read_dir(dir) {
        Ok(iter) => iter,
        Err(e) => {
            summary.issues.push(FileIssue {
                file: dir.display().to_string(),
                kind: IssueKind::Io,
                detail: e.to_string(),
            });
            return (summary, ExitClass::Io);
        }
    };

    let mut paths: Vec<PathBuf> = entries
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|ext| ext == "json"))
        .collect();
    paths.sort_by_key(|p| p.file_name().map(|n| n.to_string_lossy().into_owned()));

    summary.files = paths.len();
    let outcomes: Vec<(String, FileOutcome)> = paths
        .par_iter()
        .map(|path| {
            let name = path
                .file_name()
                .map(|n| n.to_string_lossy().into_owned())
                .unwrap_or_else(|| path.display().to_string());
            (name, process_file(path, flags, strict))
        })
        .collect();

    let mut exit = ExitClass::Success;
    for (file, outcome) in outcomes {
        match outcome {
            FileOutcome::Report(report) => {
                summary.succeeded += 1;
                if report.semistable.verdict {
                    summary.semistable += 1;
                } else {
                    summary.unstable += 1;
                }
                if let Some(oracle) = &report.oracle {
                    summary.oracle_checked += 1;
                    if oracle.pass {
                        summary.oracle_passed += 1;
                    } else {
                        exit = exit.combined(ExitClass::OracleMismatch);
                    }
                }
                summary.reports.push(*report);
            }
            FileOutcome::Issue(kind, detail) => {
                exit = exit.combined(match kind {
                    IssueKind::Io => ExitClass::Io,
                    IssueKind::Validation => ExitClass::Validation,
                });
                summary.issues.push(FileIssue { file, kind, detail });
            }
        }
    }
    (summary, exit)
}

/// Serializes a corpus summary as pretty JSON with a trailing newline.
/// Runtime is deliberately absent so identical corpora give identical bytes.
pub fn render_corpus_json(summary: &CorpusSummary) -> String {
    let mut s =
        serde_json::to_string_pretty(summary).expect("summary serialization is infallible");
    s.push('\n');
    s
}

/// Renders the human-readable corpus summary. `elapsed` is wall-clock time
/// for the whole batch; it appears only in this form, never in the JSON.
pub fn render_corpus_text(summary: &CorpusSummary, elapsed: std::time::Duration) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "corpus {} ({} files)\n",
        summary.directory, summary.files
    ));
    for report in &summary.reports {
        out.push_str(&crate::report::render_text(report));
    }
    for issue in &summary.issues {
        let kind = match issue.kind {
            IssueKind::Io => "i/o",
            IssueKind::Validation => "invalid",
        };
        out.push_str(&format!("{} [{}]: {}\n", issue.file, kind, issue.detail));
    }
    out.push_str(&format!(
        "summary: {} ok ({} semistable, {} unstable), {} failed\n",
        summary.succeeded,
        summary.semistable,
        summary.unstable,
        summary.issues.len()
    ));
    if summary.oracle_checked > 0 {
        out.push_str(&format!(
            "oracle: {}/{} reports passed\n",
            summary.oracle_passed, summary.oracle_checked
        ));
    }
    out.push_str(&format!("elapsed: {:.3}s\n", elapsed.as_secs_f64()));
    out
}
