use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::report::*;
use crate::decomp::{LemmaChecker, Resolution, TierFilter, LEDGER, LEDGER_VERSION};
use crate::divisibility::{
    color_via_perfect_division_with, is_minimal_non_pd_with, is_perfectly_divisible_with, ColoringOutcome, Limits,
    PdCache, PdStatus,
};
use crate::error::{Error, Result};
use crate::graph::{chromatic_number_exact, clique_number, parse_graph6, to_graph6, Graph};
use crate::patterns::{is_free_of, is_perfect, PatternFilter, PatternName, PerfectionMode};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PerfectScanMode {
    Spgt,
    Brute,
    /// Both, reporting disagreements.
    Cross,
}

impl FromStr for PerfectScanMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "spgt" => Ok(PerfectScanMode::Spgt),
            "brute" => Ok(PerfectScanMode::Brute),
            "cross" => Ok(PerfectScanMode::Cross),
            _ => Err(Error::Domain(format!("perfection mode must be spgt, brute or cross, got {s:?}"))),
        }
    }
}

impl fmt::Display for PerfectScanMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PerfectScanMode::Spgt => "spgt",
            PerfectScanMode::Brute => "brute",
            PerfectScanMode::Cross => "cross",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScanMode {
    Lemmas { tiers: TierFilter },
    /// Perfect divisibility of each graph, or with `minimal` whether it is
    /// a minimal non-perfectly-divisible graph.
    Conjecture { minimal: bool },
    Color,
    Perfect { mode: PerfectScanMode },
}

impl ScanMode {
    fn name(&self) -> &'static str {
        match self {
            ScanMode::Lemmas { .. } => "lemmas",
            ScanMode::Conjecture { .. } => "conjecture",
            ScanMode::Color => "color",
            ScanMode::Perfect { .. } => "perfect",
        }
    }
}

#[derive(Clone, Debug)]
pub struct ScanOptions {
    pub corpus_id: String,
    pub free: Vec<PatternName>,
    pub connected: bool,
    pub max_n: Option<usize>,
    pub jobs: usize,
    pub limits: Limits,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            corpus_id: "stdin".into(),
            free: Vec::new(),
            connected: false,
            max_n: None,
            jobs: 1,
            limits: Limits::default(),
        }
    }
}

/// Outcome of one graph: its row plus anything that must be aggregated.
struct Item {
    row: ScanRow,
    counterexample: Option<String>,
    verdicts: Vec<crate::decomp::LemmaVerdict>,
}

enum Slot {
    Error(InputError),
    OverMaxN,
    Disconnected,
    Filtered,
    Graph(usize, Graph),
}

/// Runs one scan over a graph6 corpus (one graph per line; blank lines are
/// skipped and do not count). Rows come out in input order regardless of
/// `jobs`.
pub fn run_scan(mode: ScanMode, corpus: &str, options: &ScanOptions, cache: &dyn PdCache) -> Result<ScanReport> {
    let start = Instant::now();
    let filter = PatternFilter::new(&options.free)?;
    let lines: Vec<(usize, &str)> =
        corpus.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty()).collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(options.jobs.max(1))
        .build()
        .map_err(|e| Error::Domain(format!("thread pool: {e}")))?;

    let slots: Vec<Slot> = pool.install(|| {
        lines
            .par_iter()
            .map(|&(line, text)| match parse_graph6(text) {
                Err(e) => Slot::Error(InputError { line, message: e.to_string() }),
                Ok(g) if options.max_n.is_some_and(|m| g.n() > m) => Slot::OverMaxN,
                Ok(g) if options.connected && !g.is_connected() => Slot::Disconnected,
                Ok(g) if !filter.accepts(&g) => Slot::Filtered,
                Ok(g) => Slot::Graph(line, g),
            })
            .collect()
    });
    let parse_ms = ms(start);

    let mut totals = Totals { corpus_size: lines.len(), ..Totals::default() };
    let mut input_errors = Vec::new();
    let mut graphs = Vec::new();
    for s in slots {
        match s {
            Slot::Error(e) => {
                totals.input_errors += 1;
                input_errors.push(e);
            }
            Slot::OverMaxN => totals.over_max_n += 1,
            Slot::Disconnected => totals.disconnected += 1,
            Slot::Filtered => totals.pattern_filtered += 1,
            Slot::Graph(line, g) => graphs.push((line, g)),
        }
    }

    let t = Instant::now();
    let items: Vec<Result<Item, InputError>> = pool.install(|| {
        graphs
            .par_iter()
            .map(|(line, g)| match process(mode, *line, g, options, cache) {
                Ok(item) => Ok(item),
                Err(e @ Error::OracleDisagreement { .. }) => {
                    let row = ScanRow {
                        line: *line,
                        graph6: to_graph6(g),
                        n: g.n(),
                        outcome: "oracle-disagreement".into(),
                        detail: Some(e.to_string()),
                        ..ScanRow::default()
                    };
                    Ok(Item { row, counterexample: Some(e.to_string()), verdicts: Vec::new() })
                }
                Err(e) => Err(InputError { line: *line, message: e.to_string() }),
            })
            .collect()
    });
    let process_ms = ms(t);

    let mut outcomes = BTreeMap::new();
    let mut counterexamples = Vec::new();
    let mut rows = Vec::new();
    let mut summaries: Vec<LemmaSummary> = match mode {
        ScanMode::Lemmas { tiers } => LEDGER
            .iter()
            .filter(|s| tiers.admits(s.tier))
            .map(|s| LemmaSummary { lemma_id: s.id.into(), tier: s.tier, ..LemmaSummary::default() })
            .collect(),
        _ => Vec::new(),
    };
    for item in items {
        match item {
            Err(e) => {
                // a graph that parsed but could not be processed
                totals.input_errors += 1;
                input_errors.push(e);
            }
            Ok(item) => {
                totals.processed += 1;
                *outcomes.entry(item.row.outcome.clone()).or_insert(0) += 1;
                if let Some(reason) = item.counterexample {
                    counterexamples.push(Counterexample { line: item.row.line, graph6: item.row.graph6.clone(), reason });
                }
                for v in &item.verdicts {
                    let s = summaries.iter_mut().find(|s| s.lemma_id == v.lemma_id).expect("admitted id");
                    s.evaluated += 1;
                    if v.conclusion.is_some() {
                        s.gates_hold += 1;
                    }
                    if v.is_violated() {
                        s.violated += 1;
                        match v.resolution {
                            Resolution::NonMinimal { .. } => s.resolved += 1,
                            Resolution::Unresolved { .. } => s.unresolved += 1,
                            Resolution::ReportOnly => s.report_only += 1,
                            Resolution::None => {}
                        }
                    } else if v.conclusion.is_some() {
                        s.holds += 1;
                    }
                }
                rows.push(item.row);
            }
        }
    }
    input_errors.sort_by_key(|e| e.line);

    let mut opts = BTreeMap::new();
    let free: Vec<String> = options.free.iter().map(|p| p.to_string()).collect();
    opts.insert("free".into(), free.join(","));
    opts.insert("connected".into(), options.connected.to_string());
    opts.insert("max_n".into(), options.max_n.map_or("-".into(), |m| m.to_string()));
    opts.insert("division_cap".into(), options.limits.division_cap.to_string());
    opts.insert("pd_cap".into(), options.limits.pd_cap.to_string());
    opts.insert("audit_rate".into(), options.limits.audit_rate.to_string());
    match mode {
        ScanMode::Lemmas { tiers } => {
            opts.insert("tier".into(), tiers.to_string());
        }
        ScanMode::Conjecture { minimal } => {
            opts.insert("minimal".into(), minimal.to_string());
        }
        ScanMode::Perfect { mode } => {
            opts.insert("perfection_mode".into(), mode.to_string());
        }
        ScanMode::Color => {}
    }

    Ok(ScanReport {
        schema_version: REPORT_SCHEMA_VERSION.into(),
        ledger_version: LEDGER_VERSION.into(),
        corpus_id: options.corpus_id.clone(),
        mode: mode.name().into(),
        options: opts,
        totals,
        outcomes,
        verdicts: summaries,
        counterexamples,
        input_errors,
        rows,
        timing: Timing { parse_ms, process_ms, total_ms: ms(start) },
    })
}

fn ms(t: Instant) -> f64 {
    t.elapsed().as_secs_f64() * 1e3
}

fn process(mode: ScanMode, line: usize, g: &Graph, options: &ScanOptions, cache: &dyn PdCache) -> Result<Item> {
    let mut row = ScanRow { line, graph6: to_graph6(g), n: g.n(), ..ScanRow::default() };
    let mut counterexample = None;
    let mut verdicts = Vec::new();
    let limits = &options.limits;
    match mode {
        ScanMode::Lemmas { tiers } => {
            let checker = LemmaChecker::new(g, cache, *limits);
            verdicts = checker.run(tiers)?;
            let hard = verdicts.iter().filter(|v| v.is_hard_failure()).count();
            let unresolved = verdicts.iter().filter(|v| v.is_unresolved()).count();
            row.contexts = Some(checker.contexts()?.len());
            row.hard_failures = Some(hard);
            row.unresolved = Some(unresolved);
            row.report_only = Some(verdicts.iter().filter(|v| v.resolution == Resolution::ReportOnly).count());
            row.outcome = if hard + unresolved > 0 { "violation" } else { "clean" }.into();
            if hard + unresolved > 0 {
                let ids: Vec<&str> = verdicts
                    .iter()
                    .filter(|v| v.is_hard_failure() || v.is_unresolved())
                    .map(|v| v.lemma_id.as_str())
                    .collect();
                let reason = format!("lemma violations: {}", ids.join(","));
                row.detail = Some(reason.clone());
                counterexample = Some(reason);
            }
        }
        ScanMode::Conjecture { minimal: false } => {
            let st = is_perfectly_divisible_with(g, cache, limits)?;
            row.outcome = st.label().into();
            if let PdStatus::Npd { witness } = &st {
                row.detail = Some(format!("witness {witness}"));
                counterexample = Some(format!("not perfectly divisible; witness {witness}"));
            }
        }
        ScanMode::Conjecture { minimal: true } => {
            let m = is_minimal_non_pd_with(g, cache, limits)?;
            row.outcome = if m.minimal { "minimal-npd" } else { "not-minimal" }.into();
            if m.minimal {
                let claw_free = is_free_of(g, PatternName::Claw)?;
                let fork_free = is_free_of(g, PatternName::Fork)?;
                let reason = format!("minimal non-perfectly-divisible; fork-free={fork_free}; claw-free={claw_free}");
                row.detail = Some(reason.clone());
                counterexample = Some(reason);
            }
        }
        ScanMode::Color => {
            let omega = clique_number(g).size;
            let chi = chromatic_number_exact(g)?.count;
            row.omega = Some(omega);
            row.chi = Some(chi);
            row.bound = Some(omega * (omega + 1) / 2);
            match color_via_perfect_division_with(g, limits)? {
                ColoringOutcome::Certified(c) => {
                    row.colors = Some(c.count);
                    let problem = match c.validate(g) {
                        Err(e) => Some(e.to_string()),
                        Ok(()) if c.count < chi => Some(format!("{} colours below chi = {chi}", c.count)),
                        Ok(()) => None,
                    };
                    row.outcome = if problem.is_some() { "invalid" } else { "colored" }.into();
                    if let Some(p) = problem {
                        row.detail = Some(p.clone());
                        counterexample = Some(p);
                    }
                }
                ColoringOutcome::Stuck { level, vertices } => {
                    row.outcome = "stuck".into();
                    let reason = format!("no perfect division of G[{vertices}] at level {level}");
                    row.detail = Some(reason.clone());
                    counterexample = Some(reason);
                }
            }
        }
        ScanMode::Perfect { mode } => {
            let spgt = (mode != PerfectScanMode::Brute).then(|| is_perfect(g, PerfectionMode::Spgt)).transpose()?;
            let brute = (mode != PerfectScanMode::Spgt).then(|| is_perfect(g, PerfectionMode::Brute)).transpose()?;
            match (spgt, brute) {
                (Some(s), Some(b)) if s.perfect != b.perfect => {
                    row.outcome = "disagree".into();
                    let reason = format!("spgt = {}, brute = {}", s.perfect, b.perfect);
                    row.detail = Some(reason.clone());
                    counterexample = Some(reason);
                }
                (Some(v), _) | (None, Some(v)) => {
                    row.outcome = if v.perfect { "perfect" } else { "imperfect" }.into();
                    row.detail = v.witness.map(|w| serde_json::to_string(&w).expect("serializable"));
                }
                (None, None) => unreachable!("at least one mode runs"),
            }
        }
    }
    Ok(Item { row, counterexample, verdicts })
}
