//! Append-only PD status cache on disk.
//!
//! One record per line, tab separated: `key<TAB>PD` or
//! `key<TAB>NPD<TAB>witness`, where `key` and `witness` are canonical graph6
//! strings. Lines starting with `#` and blank lines are ignored.

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::Write;
use std::path::{Path, PathBuf};

use parking_lot::{Mutex, RwLock};

use crate::divisibility::{PdCache, PdStatus};
use crate::error::{Error, Result};
use crate::graph::CanonicalForm;

pub struct FileCache {
    path: PathBuf,
    entries: RwLock<HashMap<CanonicalForm, (PdStatus, usize)>>,
    writer: Mutex<(File, usize)>,
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> Error + '_ {
    move |source| Error::CacheIo { path: path.to_path_buf(), source }
}

fn parse_record(path: &Path, line_no: usize, line: &str) -> Result<(CanonicalForm, PdStatus)> {
    let bad = |reason: &str| Error::CacheFormat { path: path.to_path_buf(), line: line_no, reason: reason.into() };
    let fields: Vec<&str> = line.split('\t').collect();
    let key = CanonicalForm::from_canonical_string(fields[0].to_string());
    let status = match fields[1..] {
        ["PD"] => PdStatus::Pd,
        ["NPD", w] => PdStatus::Npd { witness: CanonicalForm::from_canonical_string(w.to_string()) },
        _ => return Err(bad("expected key<TAB>PD or key<TAB>NPD<TAB>witness")),
    };
    if key.as_str().is_empty() {
        return Err(bad("empty key"));
    }
    Ok((key, status))
}

fn record(key: &CanonicalForm, status: &PdStatus) -> Option<String> {
    match status {
        PdStatus::Pd => Some(format!("{key}\tPD\n")),
        PdStatus::Npd { witness } => Some(format!("{key}\tNPD\t{witness}\n")),
        PdStatus::Unknown => None,
    }
}

impl FileCache {
    /// Loads `path`, creating it when missing. Identical duplicate records
    /// are accepted; conflicting ones are a corruption error.
    pub fn open(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref().to_path_buf();
        let file = OpenOptions::new().create(true).append(true).read(true).open(&path).map_err(io_err(&path))?;
        let text = std::fs::read_to_string(&path).map_err(io_err(&path))?;
        let mut entries: HashMap<CanonicalForm, (PdStatus, usize)> = HashMap::new();
        let mut lines = 0;
        for (i, line) in text.lines().enumerate() {
            lines = i + 1;
            let line = line.trim_end_matches('\r');
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, status) = parse_record(&path, i + 1, line)?;
            if let Some((old, old_line)) = entries.get(&key) {
                if *old != status {
                    return Err(corruption(&path, &key, old, *old_line, &status, i + 1));
                }
                continue;
            }
            entries.insert(key, (status, i + 1));
        }
        Ok(FileCache { path, entries: RwLock::new(entries), writer: Mutex::new((file, lines)) })
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn len(&self) -> usize {
        self.entries.read().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

fn corruption(path: &Path, key: &CanonicalForm, a: &PdStatus, la: usize, b: &PdStatus, lb: usize) -> Error {
    Error::CacheCorruption {
        path: path.to_path_buf(),
        key: key.to_string(),
        first_line: la,
        first_status: a.label().into(),
        second_line: lb,
        second_status: b.label().into(),
    }
}

impl PdCache for FileCache {
    fn get(&self, key: &CanonicalForm) -> Option<PdStatus> {
        self.entries.read().get(key).map(|(s, _)| s.clone())
    }

    fn insert(&self, key: &CanonicalForm, status: &PdStatus) -> Result<()> {
        let Some(line) = record(key, status) else { return Ok(()) };
        let mut w = self.writer.lock();
        if let Some((old, old_line)) = self.entries.read().get(key) {
            return if old == status { Ok(()) } else { Err(corruption(&self.path, key, old, *old_line, status, w.1 + 1)) };
        }
        w.0.write_all(line.as_bytes()).map_err(io_err(&self.path))?;
        w.1 += 1;
        self.entries.write().insert(key.clone(), (status.clone(), w.1));
        Ok(())
    }
}

/// Loads a cache file.
pub fn cache_load(path: impl AsRef<Path>) -> Result<FileCache> {
    FileCache::open(path)
}

/// Appends one record with a single write.
pub fn cache_append(path: impl AsRef<Path>, key: &CanonicalForm, status: &PdStatus) -> Result<()> {
    let path = path.as_ref();
    let Some(line) = record(key, status) else {
        return Err(Error::Domain("UNKNOWN statuses are not cached".into()));
    };
    let mut f = OpenOptions::new().create(true).append(true).open(path).map_err(io_err(path))?;
    f.write_all(line.as_bytes()).map_err(io_err(path))
}
