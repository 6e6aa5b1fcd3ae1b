//! Exact clique number by branch and bound over bitset rows.

use serde::{Deserialize, Serialize};

use super::{Graph, VertexSet};

/// A maximum clique and its size.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Clique {
    pub size: usize,
    pub vertices: VertexSet,
}

/// `ω(G)` with the lexicographically smallest maximum clique as witness.
pub fn clique_number(g: &Graph) -> Clique {
    let mut best = Clique { size: 0, vertices: VertexSet::EMPTY };
    expand(g, VertexSet::EMPTY, g.vertices(), &mut best);
    best
}

/// `ω(G[s])`; zero for the empty set.
pub fn clique_number_of(g: &Graph, s: VertexSet) -> usize {
    let mut best = Clique { size: 0, vertices: VertexSet::EMPTY };
    expand(g, VertexSet::EMPTY, s, &mut best);
    best.size
}

// Include-first DFS in increasing vertex order: the first clique of the final
// size reached is the lexicographically smallest one, and the bound only cuts
// branches that cannot strictly improve.
fn expand(g: &Graph, r: VertexSet, p: VertexSet, best: &mut Clique) {
    if p.is_empty() {
        if r.len() > best.size {
            *best = Clique { size: r.len(), vertices: r };
        }
        return;
    }
    if r.len() + color_bound(g, p) <= best.size {
        return;
    }
    let v = p.first().expect("nonempty");
    expand(g, r.with(v), p & g.neighbors(v), best);
    expand(g, r, p.without(v), best);
}

/// Greedy colouring of `G[p]`; the number of classes bounds `ω(G[p])`.
fn color_bound(g: &Graph, p: VertexSet) -> usize {
    let mut left = p;
    let mut k = 0;
    while !left.is_empty() {
        k += 1;
        let mut avail = left;
        while let Some(v) = avail.first() {
            left.remove(v);
            avail = avail.without(v) - g.neighbors(v);
        }
    }
    k
}

/// All maximum cliques of `G[s]`, in lexicographic order.
pub fn maximum_cliques(g: &Graph, s: VertexSet) -> Vec<VertexSet> {
    let omega = clique_number_of(g, s);
    let mut out = Vec::new();
    if omega > 0 {
        collect(g, VertexSet::EMPTY, s, omega, &mut out);
    }
    out
}

fn collect(g: &Graph, r: VertexSet, p: VertexSet, target: usize, out: &mut Vec<VertexSet>) {
    if r.len() == target {
        out.push(r);
        return;
    }
    if r.len() + p.len() < target || r.len() + color_bound(g, p) < target {
        return;
    }
    let v = p.first().expect("nonempty");
    collect(g, r.with(v), p & g.neighbors(v), target, out);
    collect(g, r, p.without(v), target, out);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(ids: &[usize]) -> VertexSet {
        ids.iter().collect()
    }

    #[test]
    fn named_examples() {
        assert_eq!(clique_number(&Graph::complete(4).unwrap()).size, 4);
        assert_eq!(clique_number(&Graph::cycle(5).unwrap()).size, 2);
        let fork = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (3, 4)]).unwrap();
        assert_eq!(clique_number(&fork).size, 2);
        assert_eq!(clique_number(&Graph::edgeless(3).unwrap()).size, 1);
    }

    #[test]
    fn witness_is_lexicographically_smallest() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(clique_number(&c5).vertices, vs(&[0, 1]));
        // two triangles {1,2,3} and {0,4,5}
        let g = Graph::from_edges(6, &[(1, 2), (2, 3), (1, 3), (0, 4), (4, 5), (0, 5)]).unwrap();
        assert_eq!(clique_number(&g).vertices, vs(&[0, 4, 5]));
    }

    #[test]
    fn subset_and_enumeration() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(clique_number_of(&c5, VertexSet::EMPTY), 0);
        assert_eq!(clique_number_of(&c5, vs(&[0, 2])), 1);
        let all = maximum_cliques(&c5, c5.vertices());
        assert_eq!(all, vec![vs(&[0, 1]), vs(&[0, 4]), vs(&[1, 2]), vs(&[2, 3]), vs(&[3, 4])]);
        assert!(maximum_cliques(&c5, VertexSet::EMPTY).is_empty());
    }

    #[test]
    fn large_graph_clique() {
        // K_8 planted in a 64-vertex cycle
        let mut edges: Vec<_> = (0..64).map(|i| (i, (i + 1) % 64)).collect();
        for a in 40..48 {
            for b in a + 2..48 {
                edges.push((a, b));
            }
        }
        let g = Graph::from_edges(64, &edges).unwrap();
        let c = clique_number(&g);
        assert_eq!(c.size, 8);
        assert_eq!(c.vertices, (40..48).collect());
    }
}
