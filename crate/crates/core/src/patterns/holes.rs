//! Odd hole and odd antihole search by induced-path extension.

use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::error::{check_cap, Result};
use crate::graph::{Graph, VertexSet};

/// Largest graph accepted by the hole searches.
pub const HOLE_CAP: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Odd,
    Even,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HoleKind {
    Hole,
    Antihole,
}

/// An induced cycle of `g` (kind `Hole`) or of its complement (kind `Antihole`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HoleWitness {
    pub cycle: Vec<usize>,
    pub parity: Parity,
    pub kind: HoleKind,
    /// A 5-antihole is also a 5-hole.
    #[serde(default)]
    pub also_c5: bool,
}

impl HoleWitness {
    fn new(cycle: Vec<usize>, kind: HoleKind) -> Self {
        let parity = if cycle.len() % 2 == 1 { Parity::Odd } else { Parity::Even };
        let also_c5 = kind == HoleKind::Antihole && cycle.len() == 5;
        HoleWitness { cycle, parity, kind, also_c5 }
    }

    pub fn len(&self) -> usize {
        self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycle.is_empty()
    }

    pub fn vertices(&self) -> VertexSet {
        self.cycle.iter().collect()
    }

    /// Re-checks the witness against `g`: distinct vertices, length at least
    /// 4, cyclic neighbours adjacent and every other pair non-adjacent (in the
    /// complement for antiholes).
    pub fn validate(&self, g: &Graph) -> bool {
        let k = self.cycle.len();
        if k < 4 || self.vertices().len() != k || self.cycle.iter().any(|&v| v >= g.n()) {
            return false;
        }
        if (k % 2 == 1) != (self.parity == Parity::Odd) {
            return false;
        }
        let adj = |a: usize, b: usize| match self.kind {
            HoleKind::Hole => g.has_edge(a, b),
            HoleKind::Antihole => !g.has_edge(a, b),
        };
        (0..k).all(|i| {
            (i + 1..k).all(|j| {
                let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                adj(self.cycle[i], self.cycle[j]) == consecutive
            })
        })
    }
}

/// Visits every induced cycle of `G[within]` of length at least `min_len`
/// with the requested parity, each once, in canonical rotation: smallest
/// vertex first, and the second vertex smaller than the last.
pub(crate) fn visit_holes<F>(
    g: &Graph,
    within: VertexSet,
    min_len: usize,
    odd_only: bool,
    mut visit: F,
) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let mut path = Vec::with_capacity(within.len());
    for s in within {
        let allowed = within - VertexSet::full(s + 1);
        path.clear();
        path.push(s);
        extend(g, allowed, VertexSet::EMPTY, min_len.max(4), odd_only, &mut path, &mut visit)?;
    }
    ControlFlow::Continue(())
}

// `interior` is the union of neighbourhoods of path[1..len-1]; a new vertex
// must avoid it, and may touch path[0] only to close the cycle.
fn extend<F>(
    g: &Graph,
    allowed: VertexSet,
    interior: VertexSet,
    min_len: usize,
    odd_only: bool,
    path: &mut Vec<usize>,
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let s = path[0];
    let last = *path.last().expect("path starts nonempty");
    let on_path: VertexSet = path.iter().collect();
    let cand = (g.neighbors(last) & allowed) - on_path - interior;
    for w in cand {
        if path.len() > 1 && g.has_edge(w, s) {
            let len = path.len() + 1;
            if len >= min_len && (!odd_only || len % 2 == 1) && path[1] < w {
                path.push(w);
                let flow = visit(path);
                path.pop();
                flow?;
            }
            continue;
        }
        let next_interior = if path.len() > 1 { interior | g.neighbors(last) } else { interior };
        path.push(w);
        let flow = extend(g, allowed, next_interior, min_len, odd_only, path, visit);
        path.pop();
        flow?;
    }
    ControlFlow::Continue(())
}

/// First odd hole (length >= `min_len`, at least 5) inside `within`.
pub(crate) fn first_odd_hole_in(g: &Graph, within: VertexSet, min_len: usize) -> Option<Vec<usize>> {
    let mut found = None;
    let _ = visit_holes(g, within, min_len.max(5), true, |c| {
        found = Some(c.to_vec());
        ControlFlow::Break(())
    });
    found
}

/// All odd holes inside `within`, each once, in canonical rotation.
pub fn odd_holes_within(g: &Graph, within: VertexSet) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let _ = visit_holes(g, within, 5, true, |c| {
        out.push(c.to_vec());
        ControlFlow::Continue(())
    });
    out
}

pub fn find_odd_hole(g: &Graph) -> Result<Option<HoleWitness>> {
    check_cap("find_odd_hole", g.n(), HOLE_CAP)?;
    Ok(first_odd_hole_in(g, g.vertices(), 5).map(|c| HoleWitness::new(c, HoleKind::Hole)))
}

pub fn find_odd_antihole(g: &Graph) -> Result<Option<HoleWitness>> {
    check_cap("find_odd_antihole", g.n(), HOLE_CAP)?;
    let co = g.complement();
    Ok(first_odd_hole_in(&co, co.vertices(), 5).map(|c| HoleWitness::new(c, HoleKind::Antihole)))
}

pub(crate) fn antihole_witness(cycle: Vec<usize>) -> HoleWitness {
    HoleWitness::new(cycle, HoleKind::Antihole)
}

pub(crate) fn hole_witness(cycle: Vec<usize>) -> HoleWitness {
    HoleWitness::new(cycle, HoleKind::Hole)
}
