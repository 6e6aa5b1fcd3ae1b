use serde::{Deserialize, Serialize};

use super::search::Searcher;
use super::{DivisionCertificate, Limits};
use crate::error::{check_cap, Error, Result};
use crate::graph::{clique_number_of, color_exact, Graph, VertexSet};

/// A colouring built level by level: colour `G[A_k]` optimally with a fresh
/// palette, then recurse on `B_k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringCertificate {
    pub colors: Vec<usize>,
    pub count: usize,
    pub omega: usize,
    /// `C(ω+1, 2)`.
    pub bound: usize,
    pub levels: Vec<DivisionCertificate>,
}

impl ColoringCertificate {
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let bad = |why: String| Err(Error::Domain(format!("invalid colouring certificate: {why}")));
        let omega = clique_number_of(g, g.vertices());
        if self.omega != omega || self.bound != omega * (omega + 1) / 2 {
            return bad(format!("omega/bound {}/{} but omega is {omega}", self.omega, self.bound));
        }
        if self.colors.len() != g.n() || self.colors.iter().any(|&c| c >= self.count) {
            return bad("colour vector does not match the graph".into());
        }
        if let Some((u, v)) = g.edges().find(|&(u, v)| self.colors[u] == self.colors[v]) {
            return bad(format!("edge {u}-{v} is monochromatic"));
        }
        if self.count > self.bound {
            return bad(format!("{} colours exceed the bound {}", self.count, self.bound));
        }
        let mut rest = g.vertices();
        for (k, level) in self.levels.iter().enumerate() {
            level.validate_within(g, rest)?;
            if level.omega_g + k > omega {
                return bad(format!("level {k} has omega {} > {omega} - {k}", level.omega_g));
            }
            rest = level.b;
        }
        if !rest.is_empty() {
            return bad(format!("vertices {rest} left uncoloured"));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum ColoringOutcome {
    Certified(ColoringCertificate),
    /// `G[vertices]` at recursion depth `level` has no perfect division.
    Stuck { level: usize, vertices: VertexSet },
}

pub fn color_via_perfect_division(g: &Graph) -> Result<ColoringOutcome> {
    color_via_perfect_division_with(g, &Limits::default())
}

pub fn color_via_perfect_division_with(g: &Graph, limits: &Limits) -> Result<ColoringOutcome> {
    check_cap("color_via_perfect_division", g.n(), limits.division_cap)?;
    let mut searcher = Searcher::new(g, limits)?;
    let omega = clique_number_of(g, g.vertices());
    let mut colors = vec![usize::MAX; g.n()];
    let mut count = 0;
    let mut levels = Vec::new();
    let mut rest = g.vertices();
    while !rest.is_empty() {
        let Some(level) = searcher.division(rest)? else {
            return Ok(ColoringOutcome::Stuck { level: levels.len(), vertices: rest });
        };
        let ids = level.a.to_vec();
        let local = color_exact(&g.induced_unchecked(level.a));
        for (i, &v) in ids.iter().enumerate() {
            colors[v] = count + local.colors[i];
        }
        count += local.count;
        rest = level.b;
        levels.push(level);
    }
    Ok(ColoringOutcome::Certified(ColoringCertificate { colors, count, omega, bound: omega * (omega + 1) / 2, levels }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::chromatic_number_exact;

    fn certified(g: &Graph) -> ColoringCertificate {
        match color_via_perfect_division(g).unwrap() {
            ColoringOutcome::Certified(c) => {
                c.validate(g).unwrap();
                c
            }
            other => panic!("stuck: {other:?}"),
        }
    }

    #[test]
    fn c5_and_k4() {
        let c = certified(&Graph::cycle(5).unwrap());
        assert_eq!((c.count, c.bound), (3, 3));
        let c = certified(&Graph::complete(4).unwrap());
        assert_eq!((c.count, c.bound, c.levels.len()), (4, 10, 1));
    }

    #[test]
    fn antihole_and_wheel() {
        let g = Graph::cycle(7).unwrap().complement();
        let c = certified(&g);
        assert!(c.count >= chromatic_number_exact(&g).unwrap().count);
        let w = Graph::cycle(5).unwrap().join(&Graph::edgeless(1).unwrap()).unwrap();
        let c = certified(&w);
        assert_eq!(c.omega, 3);
        assert!(c.count >= 4 && c.count <= 6);
    }

    #[test]
    fn tampered_certificate_fails() {
        let g = Graph::cycle(5).unwrap();
        let mut c = certified(&g);
        c.colors[1] = c.colors[0];
        assert!(c.validate(&g).is_err());
    }
}
