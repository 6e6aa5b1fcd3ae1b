//! Exact colouring: backtracking for single graphs, subset dynamic programming
//! when `ω` and `χ` are needed for every induced subgraph at once.

use serde::{Deserialize, Serialize};

use super::{clique_number, Graph, VertexSet};
use crate::error::{check_cap, Result};

/// Largest graph accepted by [`chromatic_number_exact`].
pub const CHROMATIC_CAP: usize = 16;

/// Largest graph accepted by [`SubsetTables::new`].
pub const BRUTE_TABLE_CAP: usize = 10;

/// A proper colouring; `colors[v]` is the class of vertex `v`, classes are `0..count`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub colors: Vec<usize>,
    pub count: usize,
}

impl Coloring {
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.len() == g.n()
            && self.colors.iter().all(|&c| c < self.count)
            && g.edges().all(|(u, v)| self.colors[u] != self.colors[v])
    }
}

/// `χ(G)` with the lexicographically smallest optimal colouring, for `n <= 16`.
pub fn chromatic_number_exact(g: &Graph) -> Result<Coloring> {
    check_cap("chromatic_number_exact", g.n(), CHROMATIC_CAP)?;
    Ok(color_exact(g))
}

/// Same as [`chromatic_number_exact`] without the size guard.
pub fn color_exact(g: &Graph) -> Coloring {
    let n = g.n();
    let lower = clique_number(g).size.max(1);
    let mut colors = vec![0; n];
    for k in lower..=n {
        let mut classes = vec![VertexSet::EMPTY; k];
        if assign(g, 0, k, 0, &mut classes, &mut colors) {
            return Coloring { colors, count: k };
        }
    }
    unreachable!("n colours always suffice")
}

fn assign(
    g: &Graph,
    v: usize,
    k: usize,
    used: usize,
    classes: &mut [VertexSet],
    colors: &mut [usize],
) -> bool {
    if v == g.n() {
        return true;
    }
    let nb = g.neighbors(v);
    for c in 0..k.min(used + 1) {
        if classes[c].intersects(nb) {
            continue;
        }
        classes[c].insert(v);
        colors[v] = c;
        if assign(g, v + 1, k, used.max(c + 1), classes, colors) {
            return true;
        }
        classes[c].remove(v);
    }
    false
}

/// `ω(G[S])` and `χ(G[S])` for every `S ⊆ V(G)`, by dynamic programming over
/// subsets. Independent of any structural theory of perfection.
pub struct SubsetTables {
    n: usize,
    omega: Vec<u8>,
    chi: Vec<u8>,
}

impl SubsetTables {
    pub fn new(g: &Graph) -> Result<Self> {
        check_cap("subset tables", g.n(), BRUTE_TABLE_CAP)?;
        let n = g.n();
        let size = 1usize << n;
        let mut omega = vec![0u8; size];
        let mut indep = vec![false; size];
        let mut chi = vec![0u8; size];
        indep[0] = true;
        for s in 1..size {
            let v = s.trailing_zeros() as usize;
            let rest = s & !(1 << v);
            let nb = g.neighbors(v).bits() as usize;
            omega[s] = omega[rest].max(1 + omega[s & nb]);
            indep[s] = indep[rest] && s & nb == 0;
            // v's colour class is {v} ∪ J with J an independent subset of S \ N[v]
            let free = rest & !nb;
            let mut best = u8::MAX;
            let mut j = free;
            loop {
                if indep[j] {
                    best = best.min(1 + chi[rest & !j]);
                }
                if j == 0 {
                    break;
                }
                j = (j - 1) & free;
            }
            chi[s] = best;
        }
        Ok(SubsetTables { n, omega, chi })
    }

    pub fn omega(&self, s: VertexSet) -> usize {
        self.omega[s.bits() as usize] as usize
    }

    pub fn chi(&self, s: VertexSet) -> usize {
        self.chi[s.bits() as usize] as usize
    }

    /// The first `S` (by size, then by bitmask) with `χ(G[S]) > ω(G[S])`.
    pub fn first_imperfect(&self) -> Option<VertexSet> {
        let size = 1usize << self.n;
        (0..=self.n).find_map(|k| {
            (0..size)
                .filter(|s| s.count_ones() as usize == k)
                .find(|&s| self.chi[s] > self.omega[s])
                .map(|s| VertexSet::from_bits(s as u64))
        })
    }
}
