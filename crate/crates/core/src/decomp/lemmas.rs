//! Gated structural checks around odd holes.
//!
//! Tier 1 entries are hard assertions: whenever their gates hold, the
//! conclusion must hold. Tier 2 entries only hold for minimal
//! non-perfectly-divisible graphs, which cannot be gated on directly; a
//! violation is instead *resolved* by a certificate that the graph is not
//! minimal (see [`MinimalityCertificate`]). An unresolved tier 2 violation
//! would be a counterexample candidate.

use std::cell::OnceCell;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{decompose_hole_neighborhood, distinct_hole_contexts, find_homogeneous_set, Decomposition, HoleContext};
use crate::divisibility::{is_minimal_non_pd_with, Limits, MinimalityCertificate, PdCache};
use crate::error::{Error, Result};
use crate::graph::{clique_number_of, maximum_cliques, Graph, VertexSet};
use crate::patterns::{contains_induced, is_free_of, build_named_graph, PatternName, PerfectionOracle};

/// Bumped whenever an entry is added, removed or changes meaning.
pub const LEDGER_VERSION: &str = "1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Gate {
    ForkFree,
    Connected,
    P7Free,
    P6K1Free,
    /// `U ≠ ∅` for the context.
    UNonempty,
    /// `U' ≠ ∅` for the context, i.e. the hole lies in an odd parachute.
    UPrimeNonempty,
}

impl Gate {
    pub fn token(self) -> &'static str {
        match self {
            Gate::ForkFree => "fork-free",
            Gate::Connected => "connected",
            Gate::P7Free => "p7-free",
            Gate::P6K1Free => "p6k1-free",
            Gate::UNonempty => "u-nonempty",
            Gate::UPrimeNonempty => "u-prime-nonempty",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Scope {
    /// Evaluated once per odd hole `C` with `M(C) ≠ ∅`.
    Context,
    /// Evaluated once per graph.
    Graph,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LemmaSpec {
    pub id: &'static str,
    pub tier: u8,
    pub scope: Scope,
    pub gates: &'static [Gate],
    /// Violations are reported but never counted as failures.
    pub report_only: bool,
    pub statement: &'static str,
}

use Gate::*;
use Scope::{Context as Ctx, Graph as Gr};

const fn spec(id: &'static str, tier: u8, scope: Scope, gates: &'static [Gate], statement: &'static str) -> LemmaSpec {
    LemmaSpec { id, tier, scope, gates, report_only: false, statement }
}

pub const LEDGER: &[LemmaSpec] = &[
    spec("residual-empty", 1, Ctx, &[ForkFree], "every x in N(M(C)) has N_C(x) a consecutive pair or all of V(C)"),
    spec("ui-clique", 1, Ctx, &[ForkFree], "each U_i is a clique; the U_i are pairwise disjoint"),
    spec("nmc-u-clique", 1, Ctx, &[ForkFree], "N_{M(C)}(u) is a clique for u in U"),
    spec("u-prime-component", 1, Ctx, &[ForkFree], "each u' in U' is complete or anticomplete to each component of G[M(C)]"),
    spec("u-prime-complete", 1, Ctx, &[ForkFree], "U' is complete to U + V(C) + Y' + Z"),
    spec("z-prime-anticomplete-u", 1, Ctx, &[ForkFree], "Z' is anticomplete to U"),
    spec("z-prime-clique", 1, Ctx, &[ForkFree, UNonempty], "Z' is a clique"),
    spec("z-consecutive-pair", 1, Ctx, &[ForkFree], "each z in Z has two consecutive hole neighbours"),
    LemmaSpec {
        id: "w-t-complete",
        tier: 1,
        scope: Ctx,
        gates: &[ForkFree],
        report_only: true,
        statement: "for u in U and y in N_{M(C)}(u), every w in N(u) - N_C(u) - N[y] is complete to N_C(u)",
    },
    spec("z-complete-ui", 1, Ctx, &[ForkFree], "z in Z with a neighbour in U_i is complete to U_i"),
    spec("z-hole-shape", 1, Ctx, &[ForkFree], "z in Z adjacent to U_i has N_C(z) = P_i or P_i + P_j for some j != i, P_k the k-th consecutive pair"),
    spec("z-u-two-parts", 1, Ctx, &[ForkFree], "N_U(z) meets at most two of the U_i for z in Z"),
    spec("adjacent-u-share-mc", 1, Ctx, &[ForkFree], "adjacent u in U_i and w in U_j (i != j) have equal M(C)-neighbourhoods"),
    spec("u-not-mixed-p7", 1, Ctx, &[ForkFree, P7Free], "no u in U is mixed on a component of G[M(C)]"),
    spec("u-nonempty", 2, Ctx, &[ForkFree], "U is nonempty"),
    spec("mc-minus-yprime-stable", 2, Ctx, &[ForkFree], "M(C) - Y' is stable and each of its vertices has N(x) within U'"),
    spec("omega-W-drop", 2, Ctx, &[ForkFree], "omega(N(U_i + M(C))) < omega(G) whenever U_i is nonempty"),
    spec("parachute-mc-stable", 2, Ctx, &[ForkFree, UPrimeNonempty], "M(C) is stable"),
    spec("nmc-consecutive-pair", 2, Ctx, &[ForkFree], "every x in N(M(C)) has N_C(x) a consecutive pair"),
    spec("mc-clique-p6k1", 2, Ctx, &[ForkFree, P6K1Free], "M(C) is a clique"),
    spec("no-homogeneous-set", 2, Gr, &[], "G has no homogeneous set"),
    spec("mv-odd-antihole-c5-only", 2, Gr, &[ForkFree, Connected], "no G[M(v)] contains an odd antihole of length at least 7"),
    spec("mixed-balloon-exists", 2, Gr, &[ForkFree], "some odd hole C, u in U(C) and component B of G[M(C)] have u mixed on B"),
    spec("odd-parachute-free", 2, Gr, &[ForkFree], "no odd hole C has U'(C) nonempty"),
    spec("claw-center-mv-perfect", 2, Gr, &[ForkFree], "G[M(v)] is perfect for every claw center v"),
    spec("claw-free", 2, Gr, &[ForkFree], "G is claw-free"),
];

pub fn lemma_spec(id: &str) -> Result<&'static LemmaSpec> {
    LEDGER
        .iter()
        .find(|s| s.id == id)
        .ok_or_else(|| Error::Domain(format!("unknown lemma id {id:?}")))
}

/// The ledger as tab-separated text: `id tier scope gates report_only statement`.
pub fn ledger_tsv() -> String {
    let mut out = format!("# ledger version {LEDGER_VERSION}\nid\ttier\tscope\tgates\treport_only\tstatement\n");
    for s in LEDGER {
        let gates: Vec<&str> = s.gates.iter().map(|g| g.token()).collect();
        let gates = if gates.is_empty() { "-".to_string() } else { gates.join(",") };
        let scope = match s.scope {
            Ctx => "context",
            Gr => "graph",
        };
        out.push_str(&format!("{}\t{}\t{scope}\t{gates}\t{}\t{}\n", s.id, s.tier, s.report_only, s.statement));
    }
    out
}

/// Which tiers a run evaluates.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TierFilter {
    One,
    Two,
    #[default]
    All,
}

impl TierFilter {
    pub fn admits(self, tier: u8) -> bool {
        matches!((self, tier), (TierFilter::All, _) | (TierFilter::One, 1) | (TierFilter::Two, 2))
    }
}

impl FromStr for TierFilter {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "1" => Ok(TierFilter::One),
            "2" => Ok(TierFilter::Two),
            "all" => Ok(TierFilter::All),
            _ => Err(Error::Domain(format!("tier must be 1, 2 or all, got {s:?}"))),
        }
    }
}

impl fmt::Display for TierFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TierFilter::One => "1",
            TierFilter::Two => "2",
            TierFilter::All => "all",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum GateStatus {
    GatesHold,
    GatesFail { gate: Gate },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum Conclusion {
    Holds,
    Violated { witness: Vec<usize>, detail: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Resolution {
    /// Nothing to resolve: gates failed, conclusion held, or tier 1.
    None,
    /// Violation of a report-only entry.
    ReportOnly,
    NonMinimal { certificate: MinimalityCertificate },
    Unresolved { reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaVerdict {
    pub lemma_id: String,
    pub tier: u8,
    /// The hole of the context, for context-scoped entries.
    pub hole: Option<Vec<usize>>,
    pub gate_status: GateStatus,
    /// Absent when a gate fails.
    pub conclusion: Option<Conclusion>,
    pub resolution: Resolution,
}

impl LemmaVerdict {
    pub fn is_violated(&self) -> bool {
        matches!(self.conclusion, Some(Conclusion::Violated { .. }))
    }

    /// A tier 1 violation of an asserted entry.
    pub fn is_hard_failure(&self) -> bool {
        self.tier == 1 && self.is_violated() && self.resolution != Resolution::ReportOnly
    }

    pub fn is_unresolved(&self) -> bool {
        matches!(self.resolution, Resolution::Unresolved { .. })
    }
}

/// Evaluates ledger entries on one graph, sharing the expensive facts.
pub struct LemmaChecker<'a> {
    g: &'a Graph,
    cache: &'a dyn PdCache,
    limits: Limits,
    fork_free: OnceCell<bool>,
    p7_free: OnceCell<bool>,
    p6k1_free: OnceCell<bool>,
    omega: OnceCell<usize>,
    contexts: OnceCell<Vec<(HoleContext, Decomposition)>>,
    minimality: OnceCell<Resolution>,
}

impl<'a> LemmaChecker<'a> {
    pub fn new(g: &'a Graph, cache: &'a dyn PdCache, limits: Limits) -> Self {
        LemmaChecker {
            g,
            cache,
            limits,
            fork_free: OnceCell::new(),
            p7_free: OnceCell::new(),
            p6k1_free: OnceCell::new(),
            omega: OnceCell::new(),
            contexts: OnceCell::new(),
            minimality: OnceCell::new(),
        }
    }

    fn free_of(&self, cell: &OnceCell<bool>, name: PatternName) -> Result<bool> {
        if let Some(&b) = cell.get() {
            return Ok(b);
        }
        let b = is_free_of(self.g, name)?;
        Ok(*cell.get_or_init(|| b))
    }

    fn omega(&self) -> usize {
        *self.omega.get_or_init(|| clique_number_of(self.g, self.g.vertices()))
    }

    /// Every odd hole with `M(C) ≠ ∅` and its decomposition.
    pub fn contexts(&self) -> Result<&[(HoleContext, Decomposition)]> {
        if self.contexts.get().is_none() {
            let list = distinct_hole_contexts(self.g)?
                .into_iter()
                .map(|c| decompose_hole_neighborhood(self.g, &c).map(|d| (c, d)))
                .collect::<Result<Vec<_>>>()?;
            let _ = self.contexts.set(list);
        }
        Ok(self.contexts.get().expect("set above"))
    }

    fn gate_holds(&self, gate: Gate, d: Option<&Decomposition>) -> Result<bool> {
        Ok(match gate {
            ForkFree => self.free_of(&self.fork_free, PatternName::Fork)?,
            Connected => self.g.is_connected(),
            P7Free => self.free_of(&self.p7_free, PatternName::Path(7))?,
            P6K1Free => self.free_of(&self.p6k1_free, PatternName::P6K1)?,
            UNonempty => d.is_some_and(|d| !d.u.is_empty()),
            UPrimeNonempty => d.is_some_and(|d| !d.u_prime.is_empty()),
        })
    }

    fn resolve(&self) -> Resolution {
        self.minimality
            .get_or_init(|| match is_minimal_non_pd_with(self.g, self.cache, &self.limits) {
                Ok(r) => match r.certificate {
                    Some(certificate) => Resolution::NonMinimal { certificate },
                    None => Resolution::Unresolved { reason: "graph is minimal non-perfectly-divisible".into() },
                },
                Err(e) => Resolution::Unresolved { reason: e.to_string() },
            })
            .clone()
    }

    /// Evaluates one entry. `d` must be the decomposition of `ctx`; both are
    /// ignored by graph-scoped entries.
    pub fn check(&self, id: &str, ctx: Option<&HoleContext>, d: Option<&Decomposition>) -> Result<LemmaVerdict> {
        let spec = lemma_spec(id)?;
        if spec.scope == Ctx && d.is_none() {
            return Err(Error::Domain(format!("lemma {id} needs a hole context")));
        }
        let hole = if spec.scope == Ctx { ctx.map(|c| c.hole.clone()).or(d.map(|d| d.hole.clone())) } else { None };
        let mut verdict = LemmaVerdict {
            lemma_id: spec.id.to_string(),
            tier: spec.tier,
            hole,
            gate_status: GateStatus::GatesHold,
            conclusion: None,
            resolution: Resolution::None,
        };
        for &gate in spec.gates {
            if !self.gate_holds(gate, d)? {
                verdict.gate_status = GateStatus::GatesFail { gate };
                return Ok(verdict);
            }
        }
        let violation = match spec.scope {
            Ctx => context_violation(self.g, id, d.expect("checked"), self.omega()),
            Gr => self.graph_violation(id)?,
        };
        verdict.conclusion = Some(match violation {
            None => Conclusion::Holds,
            Some((witness, detail)) => {
                verdict.resolution = if spec.report_only {
                    Resolution::ReportOnly
                } else if spec.tier == 2 {
                    self.resolve()
                } else {
                    Resolution::None
                };
                Conclusion::Violated { witness, detail }
            }
        });
        Ok(verdict)
    }

    /// Graph-scoped entries once, then context-scoped entries per context,
    /// both in ledger order.
    pub fn run(&self, tiers: TierFilter) -> Result<Vec<LemmaVerdict>> {
        let admitted: Vec<&LemmaSpec> = LEDGER.iter().filter(|s| tiers.admits(s.tier)).collect();
        let mut out = Vec::new();
        for s in admitted.iter().filter(|s| s.scope == Gr) {
            out.push(self.check(s.id, None, None)?);
        }
        for (c, d) in self.contexts()? {
            for s in admitted.iter().filter(|s| s.scope == Ctx) {
                out.push(self.check(s.id, Some(c), Some(d))?);
            }
        }
        Ok(out)
    }

    fn graph_violation(&self, id: &str) -> Result<Option<(Vec<usize>, String)>> {
        let g = self.g;
        Ok(match id {
            "no-homogeneous-set" => {
                if g.n() < 3 {
                    None
                } else {
                    find_homogeneous_set(g)?.map(|x| (x.to_vec(), format!("homogeneous set {x}")))
                }
            }
            "mv-odd-antihole-c5-only" => {
                let oracle = PerfectionOracle::new(g)?;
                g.vertices().iter().find_map(|v| {
                    oracle.odd_antihole_at_least(g.non_neighborhood(v), 7).map(|c| {
                        let detail = format!("M({v}) contains a {}-antihole", c.len());
                        (std::iter::once(v).chain(c).collect(), detail)
                    })
                })
            }
            "mixed-balloon-exists" => {
                let found = self.contexts()?.iter().any(|(_, d)| {
                    d.u.iter().any(|u| g.components_within(d.mc).iter().any(|&b| g.is_mixed_on(u, b)))
                });
                (!found).then(|| (Vec::new(), "no balloon center is mixed on a component of G[M(C)]".into()))
            }
            "odd-parachute-free" => self.contexts()?.iter().find_map(|(_, d)| {
                let u = d.u_prime.first()?;
                let pendant = (g.neighbors(u) & d.mc).first().expect("U' lies in N(M(C))");
                let mut w = d.hole.clone();
                w.extend([u, pendant]);
                Some((w, format!("{}-parachute with center {u}", d.hole.len())))
            }),
            "claw-center-mv-perfect" => {
                let co = g.complement();
                let oracle = PerfectionOracle::new(g)?;
                g.vertices().iter().find_map(|v| {
                    if clique_number_of(&co, g.neighbors(v)) < 3 {
                        return None;
                    }
                    let m = g.non_neighborhood(v);
                    let bad = oracle.odd_hole_in(m).or_else(|| oracle.odd_antihole_in(m))?;
                    Some((std::iter::once(v).chain(bad).collect(), format!("claw center {v} has imperfect M({v})")))
                })
            }
            "claw-free" => contains_induced(g, &build_named_graph(PatternName::Claw)?)?
                .map(|e| (e.map, "induced claw".to_string())),
            _ => unreachable!("graph-scoped id {id} has no evaluator"),
        })
    }
}

/// Evaluates one context-scoped entry with the gates already checked.
pub fn check_lemma(
    g: &Graph,
    ctx: &HoleContext,
    d: &Decomposition,
    lemma_id: &str,
    cache: &dyn PdCache,
) -> Result<LemmaVerdict> {
    LemmaChecker::new(g, cache, Limits::default()).check(lemma_id, Some(ctx), Some(d))
}

fn nonadjacent_pair(g: &Graph, s: VertexSet) -> Option<(usize, usize)> {
    s.iter().find_map(|a| (s - g.neighbors(a)).iter().find(|&b| b > a).map(|b| (a, b)))
}

fn edge_in(g: &Graph, s: VertexSet) -> Option<(usize, usize)> {
    s.iter().find_map(|a| (s & g.neighbors(a)).first().map(|b| (a, b)))
}

fn context_violation(g: &Graph, id: &str, d: &Decomposition, omega: usize) -> Option<(Vec<usize>, String)> {
    let n = d.len();
    let hole = d.hole_set();
    let nc = |x: usize| g.neighbors(x) & hole;
    let nmc = |x: usize| g.neighbors(x) & d.mc;
    let parts_of = |x: usize| -> Vec<usize> { (0..n).filter(|&i| g.neighbors(x).intersects(d.u_parts[i])).collect() };
    match id {
        "residual-empty" => d.residual.first().map(|x| (vec![x], format!("N_C({x}) = {}", nc(x)))),
        "ui-clique" => (0..n).find_map(|i| {
            nonadjacent_pair(g, d.u_parts[i]).map(|(a, b)| (vec![a, b], format!("U_{i} has non-adjacent {a}, {b}")))
        }),
        "nmc-u-clique" => d.u.iter().find_map(|u| {
            nonadjacent_pair(g, nmc(u)).map(|(a, b)| (vec![u, a, b], format!("N_M(C)({u}) not a clique")))
        }),
        "u-prime-component" | "u-not-mixed-p7" => {
            let centers = if id == "u-not-mixed-p7" { d.u } else { d.u_prime };
            let comps = g.components_within(d.mc);
            centers.iter().find_map(|u| {
                comps.iter().find(|&&b| g.is_mixed_on(u, b)).map(|&b| {
                    let inside = (b & g.neighbors(u)).first().expect("mixed");
                    let outside = (b - g.neighbors(u)).first().expect("mixed");
                    (vec![u, inside, outside], format!("{u} is mixed on component {b}"))
                })
            })
        }
        "u-prime-complete" => {
            let target = d.u | hole | d.y_prime | d.z;
            d.u_prime.iter().find_map(|u| {
                (target - g.neighbors(u)).first().map(|x| (vec![u, x], format!("{u} misses {x}")))
            })
        }
        "z-prime-anticomplete-u" => d.z_prime.iter().find_map(|z| {
            (g.neighbors(z) & d.u).first().map(|u| (vec![z, u], format!("{z} in Z' sees {u} in U")))
        }),
        "z-prime-clique" => nonadjacent_pair(g, d.z_prime).map(|(a, b)| (vec![a, b], "Z' not a clique".into())),
        "z-consecutive-pair" => d.z.iter().find_map(|z| {
            (!(0..n).any(|i| d.pair(i).is_subset(nc(z)))).then(|| (vec![z], format!("N_C({z}) = {}", nc(z))))
        }),
        "w-t-complete" => d.u.iter().find_map(|u| {
            let nu = nc(u);
            nmc(u).iter().find_map(|y| {
                let t = (g.neighbors(u) - hole) - g.neighbors(y) - VertexSet::singleton(y);
                t.iter()
                    .find(|&w| !nu.is_subset(g.neighbors(w)))
                    .map(|w| (vec![u, y, w], format!("{w} in T misses part of N_C({u}) = {nu}")))
            })
        }),
        "z-complete-ui" => d.z.iter().find_map(|z| {
            parts_of(z).into_iter().find_map(|i| {
                (d.u_parts[i] - g.neighbors(z))
                    .first()
                    .map(|u| (vec![z, u], format!("{z} sees U_{i} but misses {u}")))
            })
        }),
        "z-hole-shape" => d.z.iter().find_map(|z| {
            let nz = nc(z);
            parts_of(z).into_iter().find_map(|i| {
                let ok = nz == d.pair(i) || (0..n).any(|j| j != i && nz == d.pair(i) | d.pair(j));
                let u = (d.u_parts[i] & g.neighbors(z)).first().expect("adjacent part");
                (!ok).then(|| (vec![z, u], format!("N_C({z}) = {nz} against U_{i}")))
            })
        }),
        "z-u-two-parts" => d.z.iter().find_map(|z| {
            let parts = parts_of(z);
            (parts.len() > 2).then(|| {
                let mut w = vec![z];
                w.extend(parts.iter().map(|&i| (d.u_parts[i] & g.neighbors(z)).first().expect("adjacent part")));
                (w, format!("{z} meets parts {parts:?}"))
            })
        }),
        "adjacent-u-share-mc" => d.u.iter().find_map(|u| {
            let i = d.part_of(u).expect("u in U");
            (g.neighbors(u) & (d.u - d.u_parts[i])).iter().find(|&w| nmc(u) != nmc(w)).map(|w| {
                (vec![u, w], format!("N_M(C)({u}) = {} but N_M(C)({w}) = {}", nmc(u), nmc(w)))
            })
        }),
        "u-nonempty" => d.u.is_empty().then(|| (d.hole.clone(), "U is empty".into())),
        "mc-minus-yprime-stable" => {
            let rest = d.mc - d.y_prime;
            edge_in(g, rest).map(|(a, b)| (vec![a, b], "M(C) - Y' has an edge".into())).or_else(|| {
                rest.iter().find_map(|x| {
                    (g.neighbors(x) - d.u_prime)
                        .first()
                        .map(|w| (vec![x, w], format!("{x} has neighbour {w} outside U'")))
                })
            })
        }
        "omega-W-drop" => (0..n).filter(|&i| !d.u_parts[i].is_empty()).find_map(|i| {
            let w = g.neighborhood_of(d.u_parts[i] | d.mc);
            (clique_number_of(g, w) >= omega).then(|| {
                let q = maximum_cliques(g, w)[0];
                (q.to_vec(), format!("omega(N(U_{i} + M(C))) = omega(G) = {omega}"))
            })
        }),
        "parachute-mc-stable" => edge_in(g, d.mc).map(|(a, b)| (vec![a, b], "M(C) has an edge".into())),
        "nmc-consecutive-pair" => (d.u_prime | d.residual)
            .first()
            .map(|x| (vec![x], format!("N_C({x}) = {}", nc(x)))),
        "mc-clique-p6k1" => nonadjacent_pair(g, d.mc).map(|(a, b)| (vec![a, b], "M(C) not a clique".into())),
        _ => unreachable!("context-scoped id {id} has no evaluator"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::divisibility::MemoryCache;

    fn run(g: &Graph) -> Vec<LemmaVerdict> {
        let cache = MemoryCache::new();
        LemmaChecker::new(g, &cache, Limits::default()).run(TierFilter::All).unwrap()
    }

    #[test]
    fn ids_unique_and_known() {
        for (i, s) in LEDGER.iter().enumerate() {
            assert!(LEDGER[i + 1..].iter().all(|t| t.id != s.id), "{}", s.id);
        }
        assert!(lemma_spec("nope").is_err());
    }

    #[test]
    fn balloon_context_examples() {
        let g = build_named_graph(PatternName::Balloon(5)).unwrap();
        let ctx = HoleContext { base: 6, hole: vec![0, 1, 2, 3, 4] };
        let d = decompose_hole_neighborhood(&g, &ctx).unwrap();
        let cache = MemoryCache::new();
        let v = check_lemma(&g, &ctx, &d, "nmc-u-clique", &cache).unwrap();
        assert_eq!((v.gate_status, v.conclusion), (GateStatus::GatesHold, Some(Conclusion::Holds)));
        assert!(check_lemma(&g, &ctx, &d, "unknown", &cache).is_err());
    }

    #[test]
    fn parachute_vacuous_and_tier2_resolution() {
        let g = build_named_graph(PatternName::Parachute(5)).unwrap();
        let ctx = HoleContext { base: 6, hole: vec![0, 1, 2, 3, 4] };
        let d = decompose_hole_neighborhood(&g, &ctx).unwrap();
        let cache = MemoryCache::new();
        let v = check_lemma(&g, &ctx, &d, "z-prime-anticomplete-u", &cache).unwrap();
        assert_eq!(v.conclusion, Some(Conclusion::Holds));
        let v = check_lemma(&g, &ctx, &d, "u-nonempty", &cache).unwrap();
        assert!(v.is_violated());
        match v.resolution {
            Resolution::NonMinimal { certificate } => certificate.validate(&g, &Limits::default()).unwrap(),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn fixtures_have_no_hard_failures() {
        for name in [PatternName::Balloon(5), PatternName::Parachute(5), PatternName::Balloon(7)] {
            let g = build_named_graph(name).unwrap();
            let vs = run(&g);
            assert!(vs.iter().all(|v| !v.is_hard_failure() && !v.is_unresolved()), "{name}: {vs:#?}");
        }
    }

    #[test]
    fn gates_fail_on_fork() {
        let vs = run(&build_named_graph(PatternName::Fork).unwrap());
        assert!(vs.iter().filter(|v| v.tier == 2 && v.lemma_id != "no-homogeneous-set").all(|v| v.gate_status
            == GateStatus::GatesFail { gate: ForkFree }));
    }

    #[test]
    fn planted_violations_are_caught() {
        // C5 with two non-adjacent balloon centers on the same pair: has a fork
        let mut e: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        e.extend([(5, 0), (5, 1), (6, 0), (6, 1), (5, 7), (6, 7)]);
        let g = Graph::from_edges(8, &e).unwrap();
        let ctx = HoleContext { base: 7, hole: vec![0, 1, 2, 3, 4] };
        let d = decompose_hole_neighborhood(&g, &ctx).unwrap();
        assert_eq!(context_violation(&g, "ui-clique", &d, 3).unwrap().0, vec![5, 6]);
        let cache = MemoryCache::new();
        let v = check_lemma(&g, &ctx, &d, "ui-clique", &cache).unwrap();
        assert_eq!(v.gate_status, GateStatus::GatesFail { gate: ForkFree });
    }

    #[test]
    fn ledger_file_matches_table() {
        let shipped = include_str!("../../ledger/lemmas.tsv");
        assert_eq!(shipped, ledger_tsv());
    }
}
