use serde::{Deserialize, Serialize};

use crate::error::{check_cap, Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::patterns::{odd_holes_within, HOLE_CAP};

/// A base vertex `v` and an odd hole `C` with `V(C) ⊆ M(v)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HoleContext {
    pub base: usize,
    /// `v_1 … v_n` in canonical rotation: smallest vertex first, and the
    /// second vertex smaller than the last.
    pub hole: Vec<usize>,
}

impl HoleContext {
    pub fn hole_set(&self) -> VertexSet {
        self.hole.iter().collect()
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        let k = self.hole.len();
        let bad = |why: &str| Err(Error::Domain(format!("invalid hole context: {why}")));
        if k < 5 || k % 2 == 0 {
            return bad("hole length must be odd and at least 5");
        }
        if self.base >= g.n() || self.hole.iter().any(|&v| v >= g.n()) {
            return bad("vertex out of range");
        }
        let set = self.hole_set();
        if set.len() != k {
            return bad("repeated hole vertex");
        }
        for i in 0..k {
            for j in i + 1..k {
                let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                if g.has_edge(self.hole[i], self.hole[j]) != consecutive {
                    return bad("cycle is not chordless");
                }
            }
        }
        if !set.is_subset(g.non_neighborhood(self.base)) {
            return bad("hole meets the closed neighbourhood of the base");
        }
        Ok(())
    }
}

/// Every pair `(v, C)` with `C` an odd hole inside `M(v)`, ordered by base and
/// then by hole; each hole appears once per base.
pub fn enumerate_hole_contexts(g: &Graph) -> Result<Vec<HoleContext>> {
    check_cap("enumerate_hole_contexts", g.n(), HOLE_CAP)?;
    let holes = odd_holes_within(g, g.vertices());
    let mut out = Vec::new();
    for base in 0..g.n() {
        let m = g.non_neighborhood(base);
        for c in &holes {
            if c.iter().all(|&v| m.contains(v)) {
                out.push(HoleContext { base, hole: c.clone() });
            }
        }
    }
    Ok(out)
}

/// One context per distinct odd hole with `M(C) ≠ ∅`, using the smallest
/// member of `M(C)` as base. Decompositions depend on the hole only.
pub fn distinct_hole_contexts(g: &Graph) -> Result<Vec<HoleContext>> {
    check_cap("enumerate_hole_contexts", g.n(), HOLE_CAP)?;
    Ok(odd_holes_within(g, g.vertices())
        .into_iter()
        .filter_map(|hole| {
            let set: VertexSet = hole.iter().collect();
            g.anticomplete_set(set).first().map(|base| HoleContext { base, hole })
        })
        .collect())
}
