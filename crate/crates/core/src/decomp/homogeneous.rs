use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Smallest module containing `seed`: repeatedly absorbs every outside
/// vertex that is mixed on the current set.
pub fn module_closure(g: &Graph, seed: VertexSet) -> VertexSet {
    let mut x = seed;
    loop {
        let splitters: VertexSet = (g.vertices() - x).iter().filter(|&s| g.is_mixed_on(s, x)).collect();
        if splitters.is_empty() {
            return x;
        }
        x |= splitters;
    }
}

/// A homogeneous set `X` (`1 < |X| < n`, every outside vertex complete or
/// anticomplete to `X`), taken as the closure of the first vertex pair whose
/// closure is proper.
pub fn find_homogeneous_set(g: &Graph) -> Result<Option<VertexSet>> {
    if g.n() < 3 {
        return Err(Error::Domain(format!("homogeneous sets need n >= 3, got {}", g.n())));
    }
    let all = g.vertices();
    for a in 0..g.n() {
        for b in a + 1..g.n() {
            let x = module_closure(g, VertexSet::singleton(a).with(b));
            if x != all {
                return Ok(Some(x));
            }
        }
    }
    Ok(None)
}

pub fn is_homogeneous(g: &Graph, x: VertexSet) -> bool {
    x.len() > 1 && x.len() < g.n() && (g.vertices() - x).iter().all(|s| !g.is_mixed_on(s, x))
}
