//! Two independent perfection tests.
//!
//! `Brute` applies the definition: it tabulates `ω` and `χ` of every induced
//! subgraph. `Spgt` looks for an odd hole in the graph or its complement,
//! which is equivalent by the Strong Perfect Graph Theorem. The two are
//! cross-checked against each other in the test suites.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::holes::{antihole_witness, first_odd_hole_in, hole_witness, HoleWitness, HOLE_CAP};
use crate::error::{check_cap, Error, Result};
use crate::graph::{Graph, SubsetTables, VertexSet, BRUTE_TABLE_CAP};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PerfectionMode {
    Spgt,
    Brute,
}

impl fmt::Display for PerfectionMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PerfectionMode::Spgt => "spgt",
            PerfectionMode::Brute => "brute",
        })
    }
}

impl FromStr for PerfectionMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "spgt" => Ok(PerfectionMode::Spgt),
            "brute" => Ok(PerfectionMode::Brute),
            _ => Err(Error::Domain(format!("unknown perfection mode {s:?}"))),
        }
    }
}

/// Evidence that a graph is not perfect.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum ImperfectionWitness {
    /// An odd hole or odd antihole.
    Hole(HoleWitness),
    /// An induced subgraph with `χ > ω`.
    Subgraph { vertices: VertexSet, chi: usize, omega: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PerfectVerdict {
    pub perfect: bool,
    pub witness: Option<ImperfectionWitness>,
}

pub fn is_perfect(g: &Graph, mode: PerfectionMode) -> Result<PerfectVerdict> {
    match mode {
        PerfectionMode::Spgt => {
            check_cap("is_perfect(spgt)", g.n(), HOLE_CAP)?;
            let witness = if let Some(c) = first_odd_hole_in(g, g.vertices(), 5) {
                Some(hole_witness(c))
            } else {
                let co = g.complement();
                first_odd_hole_in(&co, co.vertices(), 7).map(antihole_witness)
            };
            Ok(PerfectVerdict { perfect: witness.is_none(), witness: witness.map(ImperfectionWitness::Hole) })
        }
        PerfectionMode::Brute => {
            check_cap("is_perfect(brute)", g.n(), BRUTE_TABLE_CAP)?;
            let t = SubsetTables::new(g)?;
            let witness = t.first_imperfect().map(|s| ImperfectionWitness::Subgraph {
                vertices: s,
                chi: t.chi(s),
                omega: t.omega(s),
            });
            Ok(PerfectVerdict { perfect: witness.is_none(), witness })
        }
    }
}

/// Perfection of induced subgraphs of one fixed graph, by odd hole search in
/// the graph and in a precomputed complement.
#[derive(Clone, Debug)]
pub struct PerfectionOracle<'a> {
    g: &'a Graph,
    co: Graph,
}

impl<'a> PerfectionOracle<'a> {
    pub fn new(g: &'a Graph) -> Result<Self> {
        check_cap("perfection oracle", g.n(), HOLE_CAP)?;
        Ok(PerfectionOracle { g, co: g.complement() })
    }

    pub fn graph(&self) -> &Graph {
        self.g
    }

    /// Is `G[s]` perfect? The empty graph is.
    pub fn is_perfect_set(&self, s: VertexSet) -> bool {
        self.odd_hole_in(s).is_none() && self.odd_antihole_in(s).is_none()
    }

    pub fn odd_hole_in(&self, s: VertexSet) -> Option<Vec<usize>> {
        first_odd_hole_in(self.g, s, 5)
    }

    /// An odd antihole of length at least 7 in `G[s]` (5-antiholes are 5-holes).
    pub fn odd_antihole_in(&self, s: VertexSet) -> Option<Vec<usize>> {
        first_odd_hole_in(&self.co, s, 7)
    }

    /// Odd antihole of length at least `min_len` in `G[s]`.
    pub fn odd_antihole_at_least(&self, s: VertexSet, min_len: usize) -> Option<Vec<usize>> {
        first_odd_hole_in(&self.co, s, min_len)
    }
}
