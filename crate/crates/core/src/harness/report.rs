use std::collections::BTreeMap;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Version of the report layout below.
pub const REPORT_SCHEMA_VERSION: &str = "1";

/// Where every input line went. The fields sum to `corpus_size`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Totals {
    pub corpus_size: usize,
    pub input_errors: usize,
    pub over_max_n: usize,
    pub disconnected: usize,
    pub pattern_filtered: usize,
    pub processed: usize,
}

impl Totals {
    pub fn is_consistent(&self) -> bool {
        self.input_errors + self.over_max_n + self.disconnected + self.pattern_filtered + self.processed
            == self.corpus_size
    }
}

/// Per-entry aggregate over every verdict of a lemmas scan.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaSummary {
    pub lemma_id: String,
    pub tier: u8,
    pub evaluated: usize,
    pub gates_hold: usize,
    pub holds: usize,
    pub violated: usize,
    pub resolved: usize,
    pub unresolved: usize,
    pub report_only: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub line: usize,
    pub graph6: String,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputError {
    pub line: usize,
    pub message: String,
}

/// One processed graph. Columns that do not apply to the mode are empty.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRow {
    pub line: usize,
    pub graph6: String,
    pub n: usize,
    pub outcome: String,
    pub omega: Option<usize>,
    pub chi: Option<usize>,
    pub colors: Option<usize>,
    pub bound: Option<usize>,
    pub contexts: Option<usize>,
    pub hard_failures: Option<usize>,
    pub unresolved: Option<usize>,
    pub report_only: Option<usize>,
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub parse_ms: f64,
    pub process_ms: f64,
    pub total_ms: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScanReport {
    pub schema_version: String,
    pub ledger_version: String,
    pub corpus_id: String,
    pub mode: String,
    /// Mode options that affect results (never `--jobs`).
    pub options: BTreeMap<String, String>,
    pub totals: Totals,
    pub outcomes: BTreeMap<String, usize>,
    pub verdicts: Vec<LemmaSummary>,
    pub counterexamples: Vec<Counterexample>,
    pub input_errors: Vec<InputError>,
    pub rows: Vec<ScanRow>,
    pub timing: Timing,
}

impl ScanReport {
    /// 0 clean, 2 counterexamples or violations, 3 input errors only.
    pub fn exit_code(&self) -> i32 {
        if !self.counterexamples.is_empty() {
            2
        } else if !self.input_errors.is_empty() {
            3
        } else {
            0
        }
    }

    /// The report with timing zeroed, for determinism comparisons.
    pub fn without_timing(&self) -> ScanReport {
        ScanReport { timing: Timing::default(), ..self.clone() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

impl FromStr for ReportFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            _ => Err(Error::Domain(format!("report format must be json or csv, got {s:?}"))),
        }
    }
}

/// JSON: the whole report. CSV: one row per processed graph.
pub fn write_report<W: Write>(r: &ScanReport, format: ReportFormat, out: W) -> std::io::Result<()> {
    match format {
        ReportFormat::Json => {
            let mut out = out;
            serde_json::to_writer_pretty(&mut out, r)?;
            writeln!(out)
        }
        ReportFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for row in &r.rows {
                w.serialize(row)?;
            }
            if r.rows.is_empty() {
                w.write_record([
                    "line", "graph6", "n", "outcome", "omega", "chi", "colors", "bound", "contexts",
                    "hard_failures", "unresolved", "report_only", "detail",
                ])?;
            }
            w.flush()
        }
    }
}

pub fn emit_report(r: &ScanReport, format: ReportFormat, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let io = |source| Error::Io { path: path.to_path_buf(), source };
    let file = File::create(path).map_err(io)?;
    let mut w = BufWriter::new(file);
    write_report(r, format, &mut w).map_err(io)?;
    w.flush().map_err(io)
}
