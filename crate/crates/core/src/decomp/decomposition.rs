use serde::{Deserialize, Serialize};

use super::HoleContext;
use crate::error::Result;
use crate::graph::{Graph, VertexSet};

/// The classes around an odd hole `C = v_1 … v_n`.
///
/// `u_parts[i]` holds the vertices of `N(M(C))` whose hole neighbourhood is
/// exactly `{v_{i+1}, v_{i+2}}` in 1-based hole numbering, that is
/// `{hole[i], hole[(i + 1) % n]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub hole: Vec<usize>,
    pub mc: VertexSet,
    pub u: VertexSet,
    pub u_parts: Vec<VertexSet>,
    pub u_prime: VertexSet,
    pub y: VertexSet,
    pub y_prime: VertexSet,
    pub z: VertexSet,
    pub z_prime: VertexSet,
    /// Members of `N(M(C))` that have neither exactly two consecutive hole
    /// neighbours nor the whole hole.
    pub residual: VertexSet,
}

impl Decomposition {
    pub fn hole_set(&self) -> VertexSet {
        self.hole.iter().collect()
    }

    pub fn len(&self) -> usize {
        self.hole.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hole.is_empty()
    }

    /// `{hole[i], hole[i+1 mod n]}`.
    pub fn pair(&self, i: usize) -> VertexSet {
        let n = self.hole.len();
        VertexSet::singleton(self.hole[i % n]).with(self.hole[(i + 1) % n])
    }

    /// `N(M(C))`.
    pub fn nmc(&self) -> VertexSet {
        self.u | self.u_prime | self.residual
    }

    /// `N(V(C))`.
    pub fn n_hole(&self) -> VertexSet {
        self.nmc() | self.z | self.z_prime
    }

    /// Index `i` with `x ∈ U_i`.
    pub fn part_of(&self, x: usize) -> Option<usize> {
        self.u_parts.iter().position(|p| p.contains(x))
    }
}

/// Computes every class of the decomposition around `ctx.hole`.
pub fn decompose_hole_neighborhood(g: &Graph, ctx: &HoleContext) -> Result<Decomposition> {
    ctx.validate(g)?;
    Ok(decompose_unchecked(g, &ctx.hole))
}

pub(crate) fn decompose_unchecked(g: &Graph, hole: &[usize]) -> Decomposition {
    let n = hole.len();
    let c: VertexSet = hole.iter().collect();
    let mc = g.anticomplete_set(c);
    let nmc = g.neighborhood_of(mc);
    let pairs: Vec<VertexSet> =
        (0..n).map(|i| VertexSet::singleton(hole[i]).with(hole[(i + 1) % n])).collect();

    let mut u_parts = vec![VertexSet::EMPTY; n];
    let mut u_prime = VertexSet::EMPTY;
    let mut residual = VertexSet::EMPTY;
    for x in nmc {
        let nc = g.neighbors(x) & c;
        if nc == c {
            u_prime.insert(x);
        } else if let Some(i) = pairs.iter().position(|&p| p == nc) {
            u_parts[i].insert(x);
        } else {
            residual.insert(x);
        }
    }
    let u = u_parts.iter().fold(VertexSet::EMPTY, |a, &b| a | b);
    let y = g.neighborhood_of(u) & mc;
    let y_prime = g
        .components_within(mc)
        .into_iter()
        .filter(|b| b.intersects(y))
        .fold(VertexSet::EMPTY, |a, b| a | b);
    let outer = g.neighborhood_of(c) - nmc;
    let z_prime: VertexSet = outer.iter().filter(|&x| c.is_subset(g.neighbors(x))).collect();
    let z = outer - z_prime;
    Decomposition { hole: hole.to_vec(), mc, u, u_parts, u_prime, y, y_prime, z, z_prime, residual }
}
