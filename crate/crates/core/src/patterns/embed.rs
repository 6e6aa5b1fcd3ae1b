//! Induced-subgraph detection by backtracking.

use serde::{Deserialize, Serialize};

use super::{build_named_graph, PatternName};
use crate::error::{check_cap, Result};
use crate::graph::{Graph, VertexSet};

/// Largest pattern accepted by [`contains_induced`].
pub const PATTERN_CAP: usize = 16;

/// An induced embedding: pattern vertex `i` maps to `map[i]` in the host.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Embedding {
    pub map: Vec<usize>,
}

impl Embedding {
    pub fn image(&self) -> VertexSet {
        self.map.iter().collect()
    }

    /// Checks injectivity and `u~v in h ⇔ map(u)~map(v) in g`.
    pub fn is_valid(&self, g: &Graph, h: &Graph) -> bool {
        self.map.len() == h.n()
            && self.map.iter().all(|&x| x < g.n())
            && self.image().len() == h.n()
            && (0..h.n()).all(|u| {
                (u + 1..h.n()).all(|v| h.has_edge(u, v) == g.has_edge(self.map[u], self.map[v]))
            })
    }
}

/// Finds the first induced copy of `h` in `g` (lexicographic in the search
/// order), or `None`.
pub fn contains_induced(g: &Graph, h: &Graph) -> Result<Option<Embedding>> {
    check_cap("contains_induced", h.n(), PATTERN_CAP)?;
    if h.n() > g.n() {
        return Ok(None);
    }
    // pattern vertices by descending degree, ties by index
    let mut order: Vec<usize> = (0..h.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(h.degree(v)), v));
    let mut map = vec![usize::MAX; h.n()];
    let found = place(g, h, &order, 0, VertexSet::EMPTY, &mut map);
    Ok(found.then(|| Embedding { map }))
}

fn place(
    g: &Graph,
    h: &Graph,
    order: &[usize],
    depth: usize,
    used: VertexSet,
    map: &mut [usize],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let p = order[depth];
    let mut cand = g.vertices() - used;
    for &q in &order[..depth] {
        let image = map[q];
        if h.has_edge(p, q) {
            cand &= g.neighbors(image);
        } else {
            cand -= g.neighbors(image);
        }
    }
    let need = h.degree(p);
    for x in cand {
        if g.degree(x) < need {
            continue;
        }
        map[p] = x;
        if place(g, h, order, depth + 1, used.with(x), map) {
            return true;
        }
    }
    map[p] = usize::MAX;
    false
}

pub fn is_free_of(g: &Graph, name: PatternName) -> Result<bool> {
    Ok(contains_induced(g, &build_named_graph(name)?)?.is_none())
}

/// Per-pattern outcome of [`classify_freeness`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Freeness {
    pub name: PatternName,
    /// `None` when `g` is free of the pattern.
    pub witness: Option<Embedding>,
}

impl Freeness {
    pub fn is_free(&self) -> bool {
        self.witness.is_none()
    }
}

pub fn classify_freeness(g: &Graph, names: &[PatternName]) -> Result<Vec<Freeness>> {
    names
        .iter()
        .map(|&name| {
            let h = build_named_graph(name)?;
            Ok(Freeness { name, witness: contains_induced(g, &h)? })
        })
        .collect()
}

/// Pre-built pattern graphs for repeated filtering.
#[derive(Clone, Debug)]
pub struct PatternFilter {
    patterns: Vec<(PatternName, Graph)>,
}

impl PatternFilter {
    pub fn new(names: &[PatternName]) -> Result<Self> {
        let patterns = names
            .iter()
            .map(|&n| {
                let h = build_named_graph(n)?;
                check_cap("contains_induced", h.n(), PATTERN_CAP)?;
                Ok((n, h))
            })
            .collect::<Result<_>>()?;
        Ok(PatternFilter { patterns })
    }

    pub fn names(&self) -> Vec<PatternName> {
        self.patterns.iter().map(|(n, _)| *n).collect()
    }

    /// True when `g` induces none of the patterns.
    pub fn accepts(&self, g: &Graph) -> bool {
        self.patterns
            .iter()
            .all(|(_, h)| contains_induced(g, h).expect("cap checked in new").is_none())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use PatternName::*;

    fn named(n: PatternName) -> Graph {
        build_named_graph(n).unwrap()
    }

    #[test]
    fn spec_examples() {
        let e = contains_induced(&named(Fork), &named(Claw)).unwrap().unwrap();
        assert_eq!(e.map[0], 0);
        assert!(e.is_valid(&named(Fork), &named(Claw)));
        assert!(contains_induced(&Graph::cycle(5).unwrap(), &named(Claw)).unwrap().is_none());
        let p7 = named(Path(7));
        let e = contains_induced(&p7, &p7).unwrap().unwrap();
        assert_eq!(e.map, (0..7).collect::<Vec<_>>());
    }

    #[test]
    fn classify_examples() {
        let c5 = Graph::cycle(5).unwrap();
        let r = classify_freeness(&c5, &[Fork, Claw, Path(7)]).unwrap();
        assert!(r.iter().all(Freeness::is_free));
        let r = classify_freeness(&named(Fork), &[Fork]).unwrap();
        assert_eq!(r[0].witness.as_ref().unwrap().map, vec![0, 1, 2, 3, 4]);
        let r = classify_freeness(&named(Balloon(5)), &[Fork]).unwrap();
        assert!(r[0].is_free());
    }

    #[test]
    fn fork_contains_claw_and_parachute_has_claw() {
        assert!(!is_free_of(&named(Fork), Claw).unwrap());
        assert!(!is_free_of(&named(Parachute(5)), Claw).unwrap());
        assert!(is_free_of(&named(Parachute(5)), Fork).unwrap());
        assert!(is_free_of(&named(Balloon(5)), Claw).unwrap());
    }

    #[test]
    fn filter_accepts() {
        let f = PatternFilter::new(&[Fork, Path(7)]).unwrap();
        assert!(f.accepts(&Graph::cycle(6).unwrap()));
        assert!(!f.accepts(&Graph::path(7).unwrap()));
        assert!(!f.accepts(&named(Fork)));
    }
}
