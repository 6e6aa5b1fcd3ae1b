//! Corpus scans, the on-disk status cache, configuration and reports.

mod cache;
mod config;
mod report;
mod scan;

pub use cache::{cache_append, cache_load, FileCache};
pub use config::apply_config;
pub use report::{
    emit_report, write_report, Counterexample, InputError, LemmaSummary, ReportFormat, ScanReport, ScanRow, Timing,
    Totals, REPORT_SCHEMA_VERSION,
};
pub use scan::{run_scan, PerfectScanMode, ScanMode, ScanOptions};

/// Environment variable naming the default cache file.
pub const CACHE_ENV: &str = "FORKDIV_CACHE";
