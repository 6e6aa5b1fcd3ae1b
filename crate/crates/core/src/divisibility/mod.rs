//! Perfect divisions, hereditary divisibility, and the colouring they induce.

mod certificate;
mod color;
mod pd;
mod search;

pub use certificate::{DivisionCertificate, DivisionRoute, DivisionWitness};
pub use color::{color_via_perfect_division, color_via_perfect_division_with, ColoringCertificate, ColoringOutcome};
pub use pd::{
    is_minimal_non_pd, is_minimal_non_pd_with, is_perfectly_divisible, is_perfectly_divisible_with, MemoryCache,
    MinimalityCertificate, MinimalityReport, PdCache, PdStatus,
};
pub use search::{fast_path_division, find_perfect_division, find_perfect_division_with};

use serde::{Deserialize, Serialize};

/// Size caps and the brute-force audit rate. The defaults are the sizes at
/// which every search here is exhaustive in reasonable time.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct Limits {
    /// Largest `n` for [`find_perfect_division`] and the colourer.
    pub division_cap: usize,
    /// Largest `n` for [`is_perfectly_divisible`] and [`is_minimal_non_pd`].
    pub pd_cap: usize,
    /// Fraction of perfection checks inside the search re-run in brute mode.
    pub audit_rate: f64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { division_cap: 12, pd_cap: 10, audit_rate: 0.01 }
    }
}
