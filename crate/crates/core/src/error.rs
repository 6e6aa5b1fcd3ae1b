use std::path::PathBuf;

use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("graph6 decode error at byte {offset}: {reason}")]
    Decode { offset: usize, reason: String },

    #[error("edge-list parse error at line {line}: {reason}")]
    EdgeList { line: usize, reason: String },

    #[error("domain error: {0}")]
    Domain(String),

    /// The input exceeds the size for which an operation is exact.
    #[error("{op} is exact only for n <= {cap}, got n = {n}")]
    Capability { op: &'static str, n: usize, cap: usize },

    #[error("perfection oracles disagree on {graph6}: spgt = {spgt}, brute = {brute}")]
    OracleDisagreement { graph6: String, spgt: bool, brute: bool },

    #[error("cache I/O failure on {path}: {source}")]
    CacheIo {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("cache corruption in {path}: key {key} is {first_status} at line {first_line} but {second_status} at line {second_line}")]
    CacheCorruption {
        path: PathBuf,
        key: String,
        first_line: usize,
        first_status: String,
        second_line: usize,
        second_status: String,
    },

    #[error("cache record malformed in {path} at line {line}: {reason}")]
    CacheFormat { path: PathBuf, line: usize, reason: String },

    #[error("I/O error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("config error at line {line}: {reason}")]
    Config { line: usize, reason: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_cap(op: &'static str, n: usize, cap: usize) -> Result<()> {
    if n > cap {
        Err(Error::Capability { op, n, cap })
    } else {
        Ok(())
    }
}
