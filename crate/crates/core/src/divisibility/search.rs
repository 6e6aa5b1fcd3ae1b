use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::hash::{Hash, Hasher};

use super::{DivisionCertificate, DivisionRoute, DivisionWitness, Limits};
use crate::error::{check_cap, Error, Result};
use crate::graph::{clique_number_of, maximum_cliques, to_graph6, Graph, VertexSet, BRUTE_TABLE_CAP};
use crate::patterns::{is_perfect, PerfectionMode, PerfectionOracle};

/// A perfect division of `g`, or `None` when none exists.
///
/// Tries, in order: `A = V` when `g` is perfect; `A = {v} ∪ M(v)` for the
/// first `v` with `G[M(v)]` perfect; every `B` in increasing size (then
/// bitmask) that contains no maximum clique. The `A` found is then grown
/// greedily in vertex order while it stays perfect.
pub fn find_perfect_division(g: &Graph) -> Result<Option<DivisionCertificate>> {
    find_perfect_division_with(g, &Limits::default())
}

pub fn find_perfect_division_with(g: &Graph, limits: &Limits) -> Result<Option<DivisionCertificate>> {
    check_cap("find_perfect_division", g.n(), limits.division_cap)?;
    Searcher::new(g, limits)?.division(g.vertices())
}

/// `({v} ∪ M(v), N(v))` when `G[M(v)]` is perfect, without any growth step.
pub fn fast_path_division(g: &Graph, v: usize) -> Result<Option<DivisionCertificate>> {
    check_cap("fast_path_division", g.n(), Limits::default().division_cap)?;
    if v >= g.n() {
        return Err(Error::Domain(format!("vertex {v} out of range for n = {}", g.n())));
    }
    let oracle = PerfectionOracle::new(g)?;
    if !oracle.is_perfect_set(g.non_neighborhood(v)) {
        return Ok(None);
    }
    let b = g.neighbors(v);
    Ok(Some(DivisionCertificate {
        a: g.non_neighborhood(v).with(v),
        b,
        omega_g: clique_number_of(g, g.vertices()),
        omega_b: clique_number_of(g, b),
        perfection_mode: PerfectionMode::Spgt,
        witness: DivisionWitness { route: DivisionRoute::FastPath, vertex: Some(v) },
    }))
}

/// Division search over induced subgraphs of one graph, with perfection
/// memoized by vertex mask.
pub(crate) struct Searcher<'g> {
    g: &'g Graph,
    oracle: PerfectionOracle<'g>,
    perfect: HashMap<VertexSet, bool>,
    audit_threshold: u64,
    graph_hash: u64,
}

impl<'g> Searcher<'g> {
    pub(crate) fn new(g: &'g Graph, limits: &Limits) -> Result<Self> {
        let mut h = DefaultHasher::new();
        to_graph6(g).hash(&mut h);
        Ok(Searcher {
            g,
            oracle: PerfectionOracle::new(g)?,
            perfect: HashMap::new(),
            audit_threshold: (limits.audit_rate.clamp(0.0, 1.0) * u64::MAX as f64) as u64,
            graph_hash: h.finish(),
        })
    }

    pub(crate) fn is_perfect(&mut self, s: VertexSet) -> Result<bool> {
        if let Some(&p) = self.perfect.get(&s) {
            return Ok(p);
        }
        let p = self.oracle.is_perfect_set(s);
        if s.len() >= 5 && s.len() <= BRUTE_TABLE_CAP && self.sampled(s) {
            let sub = self.g.induced_unchecked(s);
            let brute = is_perfect(&sub, PerfectionMode::Brute)?.perfect;
            if brute != p {
                return Err(Error::OracleDisagreement { graph6: to_graph6(&sub), spgt: p, brute });
            }
        }
        self.perfect.insert(s, p);
        Ok(p)
    }

    fn sampled(&self, s: VertexSet) -> bool {
        let mut h = DefaultHasher::new();
        (self.graph_hash, s.bits()).hash(&mut h);
        h.finish() < self.audit_threshold
    }

    /// A division of `G[s]` in original vertex ids; `s` must be nonempty.
    pub(crate) fn division(&mut self, s: VertexSet) -> Result<Option<DivisionCertificate>> {
        let g = self.g;
        let omega_g = clique_number_of(g, s);
        let found = if self.is_perfect(s)? {
            Some((s, DivisionWitness { route: DivisionRoute::Perfect, vertex: None }))
        } else {
            match self.fast_path(s)? {
                Some(hit) => Some(hit),
                None => self.exhaustive(s)?,
            }
        };
        let Some((mut a, witness)) = found else { return Ok(None) };
        for w in s - a {
            if self.is_perfect(a.with(w))? {
                a.insert(w);
            }
        }
        let b = s - a;
        Ok(Some(DivisionCertificate {
            a,
            b,
            omega_g,
            omega_b: clique_number_of(g, b),
            perfection_mode: PerfectionMode::Spgt,
            witness,
        }))
    }

    fn fast_path(&mut self, s: VertexSet) -> Result<Option<(VertexSet, DivisionWitness)>> {
        for v in s {
            let m = s & self.g.non_neighborhood(v);
            if self.is_perfect(m)? {
                let w = DivisionWitness { route: DivisionRoute::FastPath, vertex: Some(v) };
                return Ok(Some((m.with(v), w)));
            }
        }
        Ok(None)
    }

    fn exhaustive(&mut self, s: VertexSet) -> Result<Option<(VertexSet, DivisionWitness)>> {
        let cliques = maximum_cliques(self.g, s);
        let members = s.to_vec();
        let mut masks: Vec<u64> = (1..1u64 << members.len()).collect();
        masks.sort_by_key(|m| (m.count_ones(), *m));
        for m in masks {
            let b: VertexSet = members.iter().enumerate().filter(|(i, _)| m >> i & 1 == 1).map(|(_, &v)| v).collect();
            if cliques.iter().any(|q| q.is_subset(b)) {
                continue;
            }
            if self.is_perfect(s - b)? {
                return Ok(Some((s - b, DivisionWitness { route: DivisionRoute::Search, vertex: None })));
            }
        }
        Ok(None)
    }
}
