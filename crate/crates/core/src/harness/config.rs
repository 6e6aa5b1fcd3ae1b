use crate::divisibility::Limits;
use crate::error::{Error, Result};

/// Applies a `key = value` config text to `limits`. Recognised keys:
/// `division_cap`, `pd_cap`, `audit_rate`. `#` starts a comment.
pub fn apply_config(text: &str, limits: &mut Limits) -> Result<()> {
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |reason: String| Error::Config { line: i + 1, reason };
        let (key, value) = line.split_once('=').ok_or_else(|| err(format!("expected key = value, got {line:?}")))?;
        let (key, value) = (key.trim(), value.trim());
        let int = || value.parse::<usize>().map_err(|e| err(format!("{key}: {e}")));
        match key {
            "division_cap" => limits.division_cap = int()?,
            "pd_cap" => limits.pd_cap = int()?,
            "audit_rate" => {
                let r: f64 = value.parse().map_err(|e| err(format!("{key}: {e}")))?;
                if !(0.0..=1.0).contains(&r) {
                    return Err(err(format!("audit_rate {r} outside [0, 1]")));
                }
                limits.audit_rate = r;
            }
            _ => return Err(err(format!("unknown key {key:?}"))),
        }
    }
    Ok(())
}
