//! Canonical labelling by partition refinement and individualisation.
//!
//! The ordered partition starts as a single cell and is refined by neighbour
//! counts into each cell (the first pass is the degree partition). When
//! refinement stalls, every vertex of the first non-singleton cell is
//! individualised in turn. Each discrete leaf is a labelling; the canonical
//! form is the smallest graph6 string over all leaves. Children are skipped
//! when they are twins of an explored child or lie in its orbit under the
//! automorphisms found so far that fix the current prefix.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{to_graph6, Graph, VertexSet};
use crate::error::{check_cap, Result};

/// Largest graph accepted by [`canonical_form`].
pub const CANON_CAP: usize = 16;

/// graph6 string of the canonically relabelled graph. Equal iff isomorphic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CanonicalForm(String);

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// Wraps a string that is already a canonical graph6 (e.g. read back from a cache).
    pub fn from_canonical_string(s: String) -> Self {
        CanonicalForm(s)
    }

    pub fn into_string(self) -> String {
        self.0
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.0)
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    check_cap("canonical_form", g.n(), CANON_CAP)?;
    Ok(canonical_labeling(g).0)
}

/// Canonical form together with a labelling `perm` (vertex `v` goes to `perm[v]`)
/// that produces it.
pub(crate) fn canonical_labeling(g: &Graph) -> (CanonicalForm, Vec<usize>) {
    let mut search = Search { g, best: None, generators: Vec::new() };
    let root = refine(g, vec![(0..g.n()).collect()]);
    search.descend(root, &mut Vec::new());
    let (code, perm) = search.best.expect("at least one leaf");
    (CanonicalForm(code), perm)
}

type Cells = Vec<Vec<usize>>;

fn refine(g: &Graph, mut cells: Cells) -> Cells {
    loop {
        let masks: Vec<VertexSet> = cells.iter().map(|c| c.iter().collect()).collect();
        let mut next = Vec::with_capacity(g.n());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<usize>, usize)> = cell
                .iter()
                .map(|&v| (masks.iter().map(|m| (g.neighbors(v) & *m).len()).collect(), v))
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(String, Vec<usize>)>,
    generators: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn descend(&mut self, cells: Cells, prefix: &mut Vec<usize>) {
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            self.leaf(&cells);
            return;
        };
        let mut explored: Vec<usize> = Vec::new();
        for &w in &cells[target] {
            if explored.iter().any(|&e| self.twins(e, w) || self.same_orbit(prefix, e, w)) {
                continue;
            }
            explored.push(w);
            let mut child = cells.clone();
            let rest: Vec<usize> = child[target].iter().copied().filter(|&x| x != w).collect();
            child.splice(target..=target, [vec![w], rest]);
            let child = refine(self.g, child);
            prefix.push(w);
            self.descend(child, prefix);
            prefix.pop();
        }
    }

    fn leaf(&mut self, cells: &Cells) {
        let n = self.g.n();
        let mut perm = vec![0; n];
        for (pos, cell) in cells.iter().enumerate() {
            perm[cell[0]] = pos;
        }
        let code = to_graph6(&self.g.relabel_unchecked(&perm));
        match &self.best {
            None => self.best = Some((code, perm)),
            Some((best, best_perm)) => {
                if code < *best {
                    self.best = Some((code, perm));
                } else if code == *best {
                    // v -> best^-1(perm(v)) is an automorphism
                    let mut inv = vec![0; n];
                    for (v, &p) in best_perm.iter().enumerate() {
                        inv[p] = v;
                    }
                    let auto: Vec<usize> = perm.iter().map(|&p| inv[p]).collect();
                    self.generators.push(auto);
                }
            }
        }
    }

    fn twins(&self, a: usize, b: usize) -> bool {
        self.g.neighbors(a).without(b) == self.g.neighbors(b).without(a)
    }

    fn same_orbit(&self, prefix: &[usize], a: usize, b: usize) -> bool {
        let n = self.g.n();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for gen in &self.generators {
            if prefix.iter().any(|&v| gen[v] != v) {
                continue;
            }
            any = true;
            for v in 0..n {
                let (x, y) = (find(&mut parent, v), find(&mut parent, gen[v]));
                if x != y {
                    parent[x] = y;
                }
            }
        }
        any && find(&mut parent, a) == find(&mut parent, b)
    }
}
