//! Immutable simple graphs on at most 64 vertices.
//!
//! Adjacency rows are single machine words, so membership, neighbourhood
//! unions and induced restrictions are all bit operations.

mod canon;
mod clique;
mod coloring;
mod io;
mod set;

pub use canon::{canonical_form, CanonicalForm, CANON_CAP};
pub use clique::{clique_number, clique_number_of, maximum_cliques, Clique};
pub use coloring::{
    chromatic_number_exact, color_exact, Coloring, SubsetTables, BRUTE_TABLE_CAP, CHROMATIC_CAP,
};
pub use io::{parse_edge_list, parse_graph6, to_edge_list, to_graph6};
pub use set::{Iter, VertexSet};

use std::fmt;

use crate::error::{Error, Result};

/// Hard vertex limit: one adjacency row per `u64`.
pub const MAX_VERTICES: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<VertexSet>,
}

impl Graph {
    /// Builds a graph from an edge list. Loops, duplicate edges and
    /// out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::Domain(format!("vertex count {n} outside 1..=64")));
        }
        let mut rows = vec![VertexSet::EMPTY; n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Domain(format!("edge ({u}, {v}) out of range for n = {n}")));
            }
            if u == v {
                return Err(Error::Domain(format!("loop at vertex {u}")));
            }
            rows[u].insert(v);
            rows[v].insert(u);
        }
        Ok(Graph { n, rows })
    }

    /// Builds a graph from adjacency rows, checking symmetry and irreflexivity.
    pub fn from_rows(rows: Vec<VertexSet>) -> Result<Self> {
        let n = rows.len();
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::Domain(format!("vertex count {n} outside 1..=64")));
        }
        let universe = VertexSet::full(n);
        for (v, &row) in rows.iter().enumerate() {
            if !row.is_subset(universe) {
                return Err(Error::Domain(format!("row {v} names vertices beyond n = {n}")));
            }
            if row.contains(v) {
                return Err(Error::Domain(format!("loop at vertex {v}")));
            }
            for w in row {
                if !rows[w].contains(v) {
                    return Err(Error::Domain(format!("asymmetric pair ({v}, {w})")));
                }
            }
        }
        Ok(Graph { n, rows })
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<VertexSet>) -> Self {
        debug_assert!(Graph::from_rows(rows.clone()).is_ok());
        Graph { n: rows.len(), rows }
    }

    pub fn edgeless(n: usize) -> Result<Self> {
        Graph::from_edges(n, &[])
    }

    pub fn complete(n: usize) -> Result<Self> {
        let _ = Graph::edgeless(n)?;
        let all = VertexSet::full(n);
        Ok(Graph::from_rows_unchecked((0..n).map(|v| all.without(v)).collect()))
    }

    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Domain(format!("cycle needs at least 3 vertices, got {n}")));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    /// Open neighbourhood `N(v)`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.rows[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            (self.rows[u] - VertexSet::full(u + 1)).iter().map(move |v| (u, v))
        })
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<_> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    /// `N(X)`: vertices outside `X` with a neighbour in `X`.
    pub fn neighborhood_of(&self, x: VertexSet) -> VertexSet {
        let mut out = VertexSet::EMPTY;
        for v in x {
            out |= self.rows[v];
        }
        out - x
    }

    /// Neighbours of `v` inside `within`.
    #[inline]
    pub fn neighbors_in(&self, v: usize, within: VertexSet) -> VertexSet {
        self.rows[v] & within
    }

    /// `M(v)`: vertices other than `v` that are not adjacent to `v`.
    pub fn non_neighborhood(&self, v: usize) -> VertexSet {
        self.vertices() - self.rows[v] - VertexSet::singleton(v)
    }

    /// `M(X)`: vertices outside `X` with no neighbour in `X`.
    pub fn anticomplete_set(&self, x: VertexSet) -> VertexSet {
        self.vertices() - x - self.neighborhood_of(x)
    }

    #[inline]
    pub fn is_complete_to(&self, v: usize, x: VertexSet) -> bool {
        x.without(v).is_subset(self.rows[v])
    }

    #[inline]
    pub fn is_anticomplete_to(&self, v: usize, x: VertexSet) -> bool {
        !self.rows[v].intersects(x)
    }

    /// A vertex is mixed on `X` when it has both a neighbour and a non-neighbour in `X`.
    #[inline]
    pub fn is_mixed_on(&self, v: usize, x: VertexSet) -> bool {
        let hit = self.rows[v] & x;
        !hit.is_empty() && hit != x.without(v)
    }

    pub fn is_clique(&self, x: VertexSet) -> bool {
        x.iter().all(|v| self.is_complete_to(v, x))
    }

    pub fn is_stable(&self, x: VertexSet) -> bool {
        x.iter().all(|v| !self.rows[v].intersects(x))
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        Graph {
            n: self.n,
            rows: (0..self.n).map(|v| (all - self.rows[v]).without(v)).collect(),
        }
    }

    /// The subgraph induced by `s`; vertex `i` of the result is the `i`-th
    /// smallest member of `s`.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<Graph> {
        if s.is_empty() {
            return Err(Error::Domain("induced subgraph of the empty set".into()));
        }
        if !s.is_subset(self.vertices()) {
            return Err(Error::Domain(format!("vertex set {s} exceeds n = {}", self.n)));
        }
        Ok(self.induced_unchecked(s))
    }

    pub(crate) fn induced_unchecked(&self, s: VertexSet) -> Graph {
        let map: Vec<usize> = s.to_vec();
        let rows = map
            .iter()
            .map(|&v| {
                let row = self.rows[v] & s;
                map.iter()
                    .enumerate()
                    .filter(|(_, &w)| row.contains(w))
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        Graph { n: map.len(), rows }
    }

    /// `G - v`.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        self.induced_subgraph(self.vertices().without(v))
    }

    /// Relabels so that vertex `v` of `self` becomes vertex `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::Domain("permutation length differs from n".into()));
        }
        let mut seen = VertexSet::EMPTY;
        for &p in perm {
            if p >= self.n || seen.contains(p) {
                return Err(Error::Domain("not a permutation".into()));
            }
            seen.insert(p);
        }
        Ok(self.relabel_unchecked(perm))
    }

    pub(crate) fn relabel_unchecked(&self, perm: &[usize]) -> Graph {
        let mut rows = vec![VertexSet::EMPTY; self.n];
        for v in 0..self.n {
            rows[perm[v]] = self.rows[v].iter().map(|w| perm[w]).collect();
        }
        Graph { n: self.n, rows }
    }

    /// `G ∪ H`: disjoint union, `H` relabelled to follow `G`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::Domain(format!("union has {n} > 64 vertices")));
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().map(|r| VertexSet::from_bits(r.bits() << self.n)));
        Ok(Graph { n, rows })
    }

    /// `G + H`: disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let mut g = self.disjoint_union(other)?;
        let left = VertexSet::full(self.n);
        let right = g.vertices() - left;
        for v in left {
            g.rows[v] |= right;
        }
        for v in right {
            g.rows[v] |= left;
        }
        Ok(g)
    }

    /// Connected components of `G[within]`, each as a vertex set, ordered by smallest member.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut left = within;
        let mut out = Vec::new();
        while let Some(s) = left.first() {
            let mut comp = VertexSet::singleton(s);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier {
                    next |= self.rows[v] & within;
                }
                frontier = next - comp;
                comp |= next;
            }
            left -= comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components_within(self.vertices()).len() == 1
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({} {:?})", to_graph6(self), self.edges().collect::<Vec<_>>())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(ids: &[usize]) -> VertexSet {
        ids.iter().collect()
    }

    fn fork() -> Graph {
        Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (3, 4)]).unwrap()
    }

    #[test]
    fn rejects_bad_construction() {
        assert!(Graph::from_edges(0, &[]).is_err());
        assert!(Graph::from_edges(65, &[]).is_err());
        assert!(Graph::from_edges(3, &[(1, 1)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
        assert!(Graph::from_rows(vec![vs(&[1]), vs(&[])]).is_err());
        assert!(Graph::from_edges(64, &[(0, 63)]).is_ok());
    }

    #[test]
    fn induced_subgraph_examples() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.induced_subgraph(c5.vertices()).unwrap(), c5);
        let p4 = c5.induced_subgraph(vs(&[1, 2, 3, 4])).unwrap();
        assert_eq!(p4, Graph::path(4).unwrap());
        assert!(c5.induced_subgraph(VertexSet::EMPTY).is_err());

        // leaves {1,2,4} plus the subdivision vertex 3: only 3-4 survives
        let h = fork().induced_subgraph(vs(&[1, 2, 3, 4])).unwrap();
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(2, 3)]);
        // leaves {1,2,4} plus the far end only: edgeless
        let h = fork().induced_subgraph(vs(&[1, 2, 3])).unwrap();
        assert_eq!(h.edge_count(), 0);
    }

    #[test]
    fn complement_examples() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(k4.complement(), Graph::edgeless(4).unwrap());
        let c5 = Graph::cycle(5).unwrap();
        let cc = c5.complement();
        assert_eq!(cc.edge_count(), 5);
        assert!(cc.degree_sequence().iter().all(|&d| d == 2));
        assert!(cc.is_connected());
        assert_eq!(fork().complement().complement(), fork());
    }

    #[test]
    fn non_neighborhood_examples() {
        let k5 = Graph::complete(5).unwrap();
        assert!((0..5).all(|v| k5.non_neighborhood(v).is_empty()));
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.non_neighborhood(0), vs(&[2, 3]));
    }

    #[test]
    fn anticomplete_set_examples() {
        let k5 = Graph::complete(5).unwrap();
        assert!(k5.anticomplete_set(vs(&[0])).is_empty());
        let c5 = Graph::cycle(5).unwrap();
        assert!(c5.anticomplete_set(c5.vertices()).is_empty());
        // path 0-1-2-3: M({0}) = {2,3}
        let p4 = Graph::path(4).unwrap();
        assert_eq!(p4.anticomplete_set(vs(&[0])), vs(&[2, 3]));
    }

    #[test]
    fn union_and_join_counts() {
        let k1 = Graph::complete(1).unwrap();
        let p3 = Graph::path(3).unwrap();
        let dart = k1.join(&k1.disjoint_union(&p3).unwrap()).unwrap();
        assert_eq!((dart.n(), dart.edge_count()), (5, 6));
        let diamond = k1.join(&p3).unwrap();
        assert_eq!((diamond.n(), diamond.edge_count()), (4, 5));
    }

    #[test]
    fn components_and_mixing() {
        let g = Graph::from_edges(6, &[(0, 1), (2, 3), (3, 4)]).unwrap();
        assert_eq!(g.components_within(g.vertices()), vec![vs(&[0, 1]), vs(&[2, 3, 4]), vs(&[5])]);
        assert!(!g.is_connected());
        assert!(g.is_mixed_on(3, vs(&[2, 5])));
        assert!(!g.is_mixed_on(3, vs(&[2, 4])));
        assert!(g.is_complete_to(3, vs(&[2, 3, 4])));
        assert!(g.is_anticomplete_to(0, vs(&[2, 3])));
        assert!(g.is_stable(vs(&[0, 2, 4, 5])));
        assert!(g.is_clique(vs(&[2, 3])));
    }

    #[test]
    fn relabel_checks_permutation() {
        let p3 = Graph::path(3).unwrap();
        assert!(p3.relabel(&[0, 0, 1]).is_err());
        let r = p3.relabel(&[1, 0, 2]).unwrap();
        assert!(r.has_edge(1, 0) && r.has_edge(0, 2) && !r.has_edge(1, 2));
    }
}
