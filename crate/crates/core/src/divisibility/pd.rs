use std::collections::HashMap;

use parking_lot::RwLock;
use serde::{Deserialize, Serialize};

use super::search::Searcher;
use super::{DivisionCertificate, Limits};
use crate::error::{check_cap, Error, Result};
use crate::graph::{canonical_form, CanonicalForm, Graph, VertexSet};

/// Perfect divisibility of a graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "UPPERCASE")]
pub enum PdStatus {
    Pd,
    /// Not perfectly divisible; `witness` is an induced subgraph with no
    /// perfect division whose proper induced subgraphs all have one.
    Npd { witness: CanonicalForm },
    /// Input above the certification cap.
    Unknown,
}

impl PdStatus {
    pub fn is_pd(&self) -> bool {
        matches!(self, PdStatus::Pd)
    }

    pub fn label(&self) -> &'static str {
        match self {
            PdStatus::Pd => "PD",
            PdStatus::Npd { .. } => "NPD",
            PdStatus::Unknown => "UNKNOWN",
        }
    }
}

/// Status memo keyed by canonical form. Values are deterministic, so
/// concurrent duplicate inserts are harmless.
pub trait PdCache: Send + Sync {
    fn get(&self, key: &CanonicalForm) -> Option<PdStatus>;
    fn insert(&self, key: &CanonicalForm, status: &PdStatus) -> Result<()>;
}

#[derive(Debug, Default)]
pub struct MemoryCache {
    map: RwLock<HashMap<CanonicalForm, PdStatus>>,
}

impl MemoryCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.map.read().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn entries(&self) -> Vec<(CanonicalForm, PdStatus)> {
        let mut v: Vec<_> = self.map.read().iter().map(|(k, s)| (k.clone(), s.clone())).collect();
        v.sort_by(|x, y| x.0.as_str().cmp(y.0.as_str()));
        v
    }
}

impl PdCache for MemoryCache {
    fn get(&self, key: &CanonicalForm) -> Option<PdStatus> {
        self.map.read().get(key).cloned()
    }

    fn insert(&self, key: &CanonicalForm, status: &PdStatus) -> Result<()> {
        self.map.write().insert(key.clone(), status.clone());
        Ok(())
    }
}

/// Hereditary certification: `PD` iff every induced subgraph has a perfect
/// division. Perfect induced subgraphs short-circuit; the rest are memoized
/// in `cache` by canonical form.
pub fn is_perfectly_divisible(g: &Graph, cache: &dyn PdCache) -> Result<PdStatus> {
    is_perfectly_divisible_with(g, cache, &Limits::default())
}

pub fn is_perfectly_divisible_with(g: &Graph, cache: &dyn PdCache, limits: &Limits) -> Result<PdStatus> {
    check_cap("is_perfectly_divisible", g.n(), limits.pd_cap)?;
    Recursion::new(g, cache, limits)?.status(g.vertices())
}

/// Why a graph is not minimal non-perfectly-divisible.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MinimalityCertificate {
    /// The graph itself has a perfect division.
    Division(DivisionCertificate),
    /// `G - deleted` is not perfectly divisible.
    NonPdSubgraph { deleted: usize, witness: CanonicalForm },
}

impl MinimalityCertificate {
    /// Re-checks the certificate with a fresh cache.
    pub fn validate(&self, g: &Graph, limits: &Limits) -> Result<()> {
        match self {
            MinimalityCertificate::Division(c) => c.validate(g),
            MinimalityCertificate::NonPdSubgraph { deleted, .. } => {
                let h = g.delete_vertex(*deleted)?;
                match is_perfectly_divisible_with(&h, &MemoryCache::new(), limits)? {
                    PdStatus::Npd { .. } => Ok(()),
                    other => Err(Error::Domain(format!(
                        "G - {deleted} was claimed non-divisible but is {}",
                        other.label()
                    ))),
                }
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalityReport {
    pub minimal: bool,
    /// Present exactly when `minimal` is false.
    pub certificate: Option<MinimalityCertificate>,
}

/// Is `g` non-perfectly-divisible with every proper induced subgraph
/// perfectly divisible? A perfect division of `g` is tried first.
pub fn is_minimal_non_pd(g: &Graph, cache: &dyn PdCache) -> Result<MinimalityReport> {
    is_minimal_non_pd_with(g, cache, &Limits::default())
}

pub fn is_minimal_non_pd_with(g: &Graph, cache: &dyn PdCache, limits: &Limits) -> Result<MinimalityReport> {
    check_cap("is_minimal_non_pd", g.n(), limits.pd_cap)?;
    let mut r = Recursion::new(g, cache, limits)?;
    if let Some(c) = r.searcher.division(g.vertices())? {
        return Ok(MinimalityReport { minimal: false, certificate: Some(MinimalityCertificate::Division(c)) });
    }
    for v in g.vertices() {
        if let PdStatus::Npd { witness } = r.status(g.vertices().without(v))? {
            let certificate = Some(MinimalityCertificate::NonPdSubgraph { deleted: v, witness });
            return Ok(MinimalityReport { minimal: false, certificate });
        }
    }
    Ok(MinimalityReport { minimal: true, certificate: None })
}

struct Recursion<'g, 'c> {
    g: &'g Graph,
    searcher: Searcher<'g>,
    cache: &'c dyn PdCache,
    local: HashMap<VertexSet, PdStatus>,
}

impl<'g, 'c> Recursion<'g, 'c> {
    fn new(g: &'g Graph, cache: &'c dyn PdCache, limits: &Limits) -> Result<Self> {
        Ok(Recursion { g, searcher: Searcher::new(g, limits)?, cache, local: HashMap::new() })
    }

    fn status(&mut self, s: VertexSet) -> Result<PdStatus> {
        if let Some(st) = self.local.get(&s) {
            return Ok(st.clone());
        }
        if self.searcher.is_perfect(s)? {
            self.local.insert(s, PdStatus::Pd);
            return Ok(PdStatus::Pd);
        }
        let key = canonical_form(&self.g.induced_unchecked(s))?;
        if let Some(st) = self.cache.get(&key) {
            self.local.insert(s, st.clone());
            return Ok(st);
        }
        // the smallest child witness depends only on the isomorphism class,
        // so cached values do not depend on which labelled copy came first
        let mut st = PdStatus::Pd;
        for v in s {
            if let PdStatus::Npd { witness } = self.status(s.without(v))? {
                match &st {
                    PdStatus::Npd { witness: w } if w.as_str() <= witness.as_str() => {}
                    _ => st = PdStatus::Npd { witness },
                }
            }
        }
        if st.is_pd() && self.searcher.division(s)?.is_none() {
            st = PdStatus::Npd { witness: key.clone() };
        }
        self.cache.insert(&key, &st)?;
        self.local.insert(s, st.clone());
        Ok(st)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::{build_named_graph, PatternName};

    fn grotzsch() -> Graph {
        let mut e = vec![];
        for i in 0..5 {
            e.extend([(i, (i + 1) % 5), (i + 5, (i + 1) % 5), (i + 5, (i + 4) % 5), (i + 5, 10)]);
        }
        Graph::from_edges(11, &e).unwrap()
    }

    #[test]
    fn small_examples() {
        let cache = MemoryCache::new();
        for g in [
            Graph::cycle(5).unwrap(),
            build_named_graph(PatternName::Fork).unwrap(),
            Graph::complete(6).unwrap(),
            Graph::cycle(7).unwrap().complement(),
        ] {
            assert_eq!(is_perfectly_divisible(&g, &cache).unwrap(), PdStatus::Pd);
            let m = is_minimal_non_pd(&g, &cache).unwrap();
            assert!(!m.minimal);
            m.certificate.unwrap().validate(&g, &Limits::default()).unwrap();
        }
    }

    #[test]
    fn grotzsch_is_minimal_non_pd() {
        let limits = Limits { pd_cap: 11, ..Limits::default() };
        let g = grotzsch();
        let cache = MemoryCache::new();
        let st = is_perfectly_divisible_with(&g, &cache, &limits).unwrap();
        assert_eq!(st, PdStatus::Npd { witness: canonical_form(&g).unwrap() });
        let m = is_minimal_non_pd_with(&g, &cache, &limits).unwrap();
        assert!(m.minimal && m.certificate.is_none());

        // adding a pendant vertex keeps the graph NPD but not minimal
        let mut e: Vec<_> = g.edges().collect();
        e.push((0, 11));
        let h = Graph::from_edges(12, &e).unwrap();
        let limits = Limits { pd_cap: 12, ..limits };
        let m = is_minimal_non_pd_with(&h, &cache, &limits).unwrap();
        assert!(!m.minimal);
        let cert = m.certificate.unwrap();
        assert_eq!(cert, MinimalityCertificate::NonPdSubgraph { deleted: 11, witness: canonical_form(&g).unwrap() });
        cert.validate(&h, &limits).unwrap();
    }

    #[test]
    fn cap_and_status_serde() {
        let g = Graph::cycle(11).unwrap();
        assert!(matches!(is_perfectly_divisible(&g, &MemoryCache::new()), Err(Error::Capability { .. })));
        let s = serde_json::to_string(&PdStatus::Pd).unwrap();
        assert_eq!(s, r#"{"status":"PD"}"#);
    }
}
