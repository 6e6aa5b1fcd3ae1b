//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any FAIL.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use forkdiv::decomp::TierFilter;
use forkdiv::divisibility::{
    color_via_perfect_division, fast_path_division, ColoringOutcome, MemoryCache, PdCache,
};
use forkdiv::graph::{canonical_form, chromatic_number_exact, clique_number, parse_graph6, to_graph6};
use forkdiv::harness::{run_scan, ScanMode, ScanOptions, ScanReport};
use forkdiv::patterns::{is_free_of, is_perfect, PatternName, PerfectionMode, PerfectionOracle};
use forkdiv::Graph;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;

type Outcome = Result<String, String>;

fn scan(mode: ScanMode, corpus: &[String], free: Vec<PatternName>, connected: bool, jobs: usize, cache: &dyn PdCache) -> ScanReport {
    let options = ScanOptions { corpus_id: "acceptance".into(), free, connected, jobs, ..ScanOptions::default() };
    run_scan(mode, &corpus.join("\n"), &options, cache).expect("scan runs")
}

fn budget(elapsed: Duration, limit_s: u64) -> Result<(), String> {
    if elapsed > Duration::from_secs(limit_s) {
        Err(format!("took {:.1}s, budget {limit_s}s", elapsed.as_secs_f64()))
    } else {
        Ok(())
    }
}

fn perfection_agreement() -> Outcome {
    let t = Instant::now();
    let mut graphs = fixture_graphs("graphs_n1-7.g6");
    let exhaustive = graphs.len();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    for _ in 0..1000 {
        let n = rng.gen_range(8..=10);
        let p = rng.gen_range(0.15..0.85);
        graphs.push(random_graph(&mut rng, n, p));
    }
    let mut disagreements = Vec::new();
    let mut imperfect = 0;
    for g in &graphs {
        let s = is_perfect(g, PerfectionMode::Spgt).map_err(|e| e.to_string())?.perfect;
        let b = is_perfect(g, PerfectionMode::Brute).map_err(|e| e.to_string())?.perfect;
        imperfect += usize::from(!s);
        if s != b {
            disagreements.push(to_graph6(g));
        }
    }
    if !disagreements.is_empty() {
        return Err(format!("{} disagreements, first {}", disagreements.len(), disagreements[0]));
    }
    budget(t.elapsed(), 300)?;
    Ok(format!("{exhaustive} exhaustive + 1000 random graphs agree ({imperfect} imperfect)"))
}

fn pd_corpus(pattern: PatternName, jobs: usize, cache: &MemoryCache) -> Outcome {
    let t = Instant::now();
    let corpus = fork_free_upto(9);
    let small: Vec<String> = corpus.iter().filter(|l| parse_graph6(l).unwrap().n() <= 8).cloned().collect();
    let r8 = scan(ScanMode::Conjecture { minimal: false }, &small, vec![pattern], true, jobs, cache);
    let t8 = t.elapsed();
    budget(t8, 600)?;
    let r = scan(ScanMode::Conjecture { minimal: false }, &corpus, vec![pattern], true, jobs, cache);
    if !r.counterexamples.is_empty() || !r.input_errors.is_empty() {
        return Err(format!("{} counterexamples, first {:?}", r.counterexamples.len(), r.counterexamples.first()));
    }
    let pd = r.outcomes.get("PD").copied().unwrap_or(0);
    if pd != r.totals.processed || r.totals.processed == 0 {
        return Err(format!("{pd} PD of {} processed: {:?}", r.totals.processed, r.outcomes));
    }
    budget(t.elapsed(), 3600)?;
    Ok(format!(
        "{} connected graphs (n <= 8: {} in {:.2}s), all PD, {:.2}s total",
        r.totals.processed,
        r8.totals.processed,
        t8.as_secs_f64(),
        t.elapsed().as_secs_f64()
    ))
}

fn coloring_bound() -> Outcome {
    let mut graphs = Vec::new();
    for line in fork_free_upto(9) {
        let g = parse_graph6(&line).unwrap();
        if g.is_connected()
            && (is_free_of(&g, PatternName::Path(7)).unwrap() || is_free_of(&g, PatternName::P6K1).unwrap())
        {
            graphs.push(g);
        }
    }
    let mut worst_gap = 0;
    for g in &graphs {
        let fail = |why: String| Err(format!("{}: {why}", to_graph6(g)));
        let c = match color_via_perfect_division(g).map_err(|e| e.to_string())? {
            ColoringOutcome::Certified(c) => c,
            ColoringOutcome::Stuck { level, vertices } => return fail(format!("stuck at level {level} on {vertices}")),
        };
        if c.colors.len() != g.n() || g.edges().any(|(u, v)| c.colors[u] == c.colors[v]) {
            return fail("improper colouring".into());
        }
        let used: std::collections::BTreeSet<_> = c.colors.iter().collect();
        let omega = clique_number(g).size;
        let chi = chromatic_number_exact(g).map_err(|e| e.to_string())?.count;
        if used.len() != c.count || c.count > omega * (omega + 1) / 2 || c.count < chi {
            return fail(format!("count {} (distinct {}), omega {omega}, chi {chi}", c.count, used.len()));
        }
        worst_gap = worst_gap.max(c.count - chi);
    }
    Ok(format!("{} graphs coloured within bound; max colours above chi = {worst_gap}", graphs.len()))
}

fn minimal_search(cache: &MemoryCache) -> Outcome {
    let corpus = fork_free_upto(9);
    let r = scan(ScanMode::Conjecture { minimal: true }, &corpus, vec![], false, 8, cache);
    if !r.input_errors.is_empty() {
        return Err(format!("{} input errors", r.input_errors.len()));
    }
    let mut clawed = Vec::new();
    for c in &r.counterexamples {
        let g = parse_graph6(&c.graph6).unwrap();
        if !is_free_of(&g, PatternName::Claw).unwrap() {
            clawed.push(c.graph6.clone());
        }
    }
    if !r.counterexamples.is_empty() {
        let path = std::env::temp_dir().join("forkdiv-minimal-npd-hits.json");
        std::fs::write(&path, serde_json::to_string_pretty(&r.counterexamples).unwrap()).ok();
        if !clawed.is_empty() {
            return Err(format!("{} hits contain a claw, first {}; see {}", clawed.len(), clawed[0], path.display()));
        }
        return Ok(format!("{} claw-free hits written to {}", r.counterexamples.len(), path.display()));
    }
    Ok(format!("{} fork-free graphs, no minimal non-PD graph", r.totals.processed))
}

fn tier(t: TierFilter, cache: &MemoryCache) -> Result<ScanReport, String> {
    let r = scan(ScanMode::Lemmas { tiers: t }, &fork_free_upto(9), vec![], false, 8, cache);
    if !r.input_errors.is_empty() {
        return Err(format!("{} input errors", r.input_errors.len()));
    }
    Ok(r)
}

fn tier_one(cache: &MemoryCache) -> Outcome {
    let t = Instant::now();
    let r = tier(TierFilter::One, cache)?;
    let contexts: usize = r.rows.iter().filter_map(|row| row.contexts).sum();
    let violated: Vec<_> = r.verdicts.iter().filter(|s| s.violated > 0).collect();
    if !violated.is_empty() {
        let list: Vec<String> = violated.iter().map(|s| format!("{}={}", s.lemma_id, s.violated)).collect();
        return Err(format!("violations: {}", list.join(", ")));
    }
    budget(t.elapsed(), 1800)?;
    let evaluated: usize = r.verdicts.iter().map(|s| s.gates_hold).sum();
    Ok(format!("{} graphs, {contexts} contexts, {evaluated} gated checks, 0 violations", r.totals.processed))
}

fn tier_two(cache: &MemoryCache) -> Outcome {
    let r = tier(TierFilter::Two, cache)?;
    let unresolved: usize = r.verdicts.iter().map(|s| s.unresolved).sum();
    let violated: usize = r.verdicts.iter().map(|s| s.violated).sum();
    let resolved: usize = r.verdicts.iter().map(|s| s.resolved).sum();
    if unresolved > 0 || resolved != violated {
        let list: Vec<String> =
            r.verdicts.iter().filter(|s| s.unresolved > 0).map(|s| format!("{}={}", s.lemma_id, s.unresolved)).collect();
        return Err(format!("{unresolved} unresolved ({}), {resolved} of {violated} resolved", list.join(", ")));
    }
    Ok(format!("{violated} conclusion violations, all resolved by non-minimality certificates"))
}

fn fast_path() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0008);
    let (mut tried, mut done) = (0, 0);
    while done < 1000 {
        tried += 1;
        let n = rng.gen_range(2..=10);
        let p = rng.gen_range(0.2..0.8);
        let g = random_graph(&mut rng, n, p);
        let oracle = PerfectionOracle::new(&g).unwrap();
        let Some(v) = (0..n).find(|&v| oracle.is_perfect_set(g.non_neighborhood(v))) else {
            continue;
        };
        let cert = fast_path_division(&g, v)
            .map_err(|e| e.to_string())?
            .ok_or_else(|| format!("{}: no fast-path certificate at {v}", to_graph6(&g)))?;
        cert.validate(&g).map_err(|e| format!("{}: {e}", to_graph6(&g)))?;
        done += 1;
    }
    Ok(format!("1000 certificates validated ({tried} graphs drawn)"))
}

fn infrastructure() -> Outcome {
    let mut lines = fixture_lines("graphs_n1-7.g6");
    lines.extend(fixture_lines("graphs_n8.g6"));
    for l in &lines {
        let g = parse_graph6(l).map_err(|e| format!("{l}: {e}"))?;
        if to_graph6(&g) != *l {
            return Err(format!("round trip changed {l} into {}", to_graph6(&g)));
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0009);
    let mut pool = fixture_lines("graphs_n8.g6");
    pool.extend(fixture_lines("forkfree_n9.g6"));
    let sample: Vec<&String> = pool.choose_multiple(&mut rng, 1000).collect();
    for l in &sample {
        let g = parse_graph6(l).unwrap();
        let c = canonical_form(&g).unwrap();
        for _ in 0..50 {
            let h: Graph = g.relabel(&random_perm(&mut rng, g.n())).unwrap();
            if canonical_form(&h).unwrap() != c {
                return Err(format!("canonical form of {l} changed under relabeling"));
            }
        }
    }

    let corpus = fork_free_upto(8);
    for mode in [
        ScanMode::Lemmas { tiers: TierFilter::All },
        ScanMode::Conjecture { minimal: false },
        ScanMode::Color,
    ] {
        let one = scan(mode, &corpus, vec![], false, 1, &MemoryCache::new()).without_timing();
        let eight = scan(mode, &corpus, vec![], false, 8, &MemoryCache::new()).without_timing();
        if serde_json::to_string(&one).unwrap() != serde_json::to_string(&eight).unwrap() {
            return Err(format!("{} report differs between 1 and 8 jobs", one.mode));
        }
    }
    Ok(format!("{} round trips, 1000 x 50 relabelings, 3 scan modes replay identically", lines.len()))
}

fn main() -> ExitCode {
    let cache = MemoryCache::new();
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        ("perfection oracles agree", Box::new(perfection_agreement)),
        ("fork,P7-free graphs are PD", Box::new(|| pd_corpus(PatternName::Path(7), 8, &cache))),
        ("fork,P6+K1-free graphs are PD", Box::new(|| pd_corpus(PatternName::P6K1, 8, &cache))),
        ("colouring within binomial bound", Box::new(coloring_bound)),
        ("minimal non-PD search", Box::new(|| minimal_search(&cache))),
        ("tier-1 lemma suite", Box::new(|| tier_one(&cache))),
        ("tier-2 contrapositive resolution", Box::new(|| tier_two(&cache))),
        ("fast-path certificates", Box::new(fast_path)),
        ("infrastructure", Box::new(infrastructure)),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe(run))
            .unwrap_or_else(|_| Err("panicked".into()));
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {} {name}: PASS ({detail}; {secs:.2}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} {name}: FAIL ({detail}; {secs:.2}s)", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
