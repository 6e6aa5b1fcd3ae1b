use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{clique_number_of, Graph, VertexSet, BRUTE_TABLE_CAP};
use crate::patterns::{is_perfect, PerfectionMode};

/// How a division was found.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DivisionRoute {
    /// The graph itself is perfect; `B = ∅`.
    Perfect,
    /// `A = {v} ∪ M(v)` with `G[M(v)]` perfect.
    FastPath,
    /// Exhaustive search over clique transversals.
    Search,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisionWitness {
    pub route: DivisionRoute,
    /// The fast-path vertex, if any.
    pub vertex: Option<usize>,
}

/// A partition `(A, B)` of the vertex set with `G[A]` perfect and
/// `ω(G[B]) < ω(G)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisionCertificate {
    pub a: VertexSet,
    pub b: VertexSet,
    pub omega_g: usize,
    pub omega_b: usize,
    /// Mode used to accept `G[A]` during the search.
    pub perfection_mode: PerfectionMode,
    pub witness: DivisionWitness,
}

impl DivisionCertificate {
    /// Re-checks the certificate from scratch against `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        self.validate_within(g, g.vertices())
    }

    /// As [`validate`](Self::validate) for a division of `G[s]`.
    pub fn validate_within(&self, g: &Graph, s: VertexSet) -> Result<()> {
        let bad = |why: String| Err(Error::Domain(format!("invalid division: {why}")));
        if (self.a | self.b) != s || self.a.intersects(self.b) {
            return bad(format!("{} and {} do not partition {}", self.a, self.b, s));
        }
        let omega_g = clique_number_of(g, s);
        let omega_b = clique_number_of(g, self.b);
        if (omega_g, omega_b) != (self.omega_g, self.omega_b) {
            return bad(format!(
                "recorded omegas ({}, {}) but recomputed ({omega_g}, {omega_b})",
                self.omega_g, self.omega_b
            ));
        }
        if omega_b >= omega_g {
            return bad(format!("omega(B) = {omega_b} is not below omega = {omega_g}"));
        }
        if !self.a.is_empty() {
            let ga = g.induced_subgraph(self.a)?;
            if !is_perfect(&ga, PerfectionMode::Spgt)?.perfect {
                return bad(format!("G[{}] is not perfect (spgt)", self.a));
            }
            if ga.n() <= BRUTE_TABLE_CAP && !is_perfect(&ga, PerfectionMode::Brute)?.perfect {
                return bad(format!("G[{}] is not perfect (brute)", self.a));
            }
        }
        Ok(())
    }
}
