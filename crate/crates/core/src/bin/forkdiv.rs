use std::io::{self, BufRead, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::json;

use forkdiv::decomp::{decompose_hole_neighborhood, enumerate_hole_contexts, find_homogeneous_set, TierFilter};
use forkdiv::divisibility::{color_via_perfect_division_with, ColoringOutcome, Limits, MemoryCache, PdCache};
use forkdiv::graph::{parse_graph6, to_graph6};
use forkdiv::harness::{
    apply_config, emit_report, run_scan, FileCache, PerfectScanMode, ReportFormat, ScanMode, ScanOptions,
    ScanReport, CACHE_ENV,
};
use forkdiv::patterns::{parse_pattern_list, PatternFilter, PatternName};

const EXIT_INPUT: u8 = 3;

#[derive(Parser)]
#[command(name = "forkdiv", version, about = "Perfect-division checks over graph6 corpora")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Copy the graphs that induce none of the given patterns.
    Filter {
        /// Comma-separated pattern tokens, e.g. fork,p7,p6k1,claw,c5.
        #[arg(long, value_parser = parse_patterns)]
        free: Vec<Vec<PatternName>>,
        #[arg(long)]
        connected: bool,
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Print every hole context of one graph and its decomposition.
    Decompose {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate the lemma ledger on every graph.
    Lemmas {
        #[arg(long, default_value = "all")]
        tier: TierFilter,
        /// Print the ledger table and exit.
        #[arg(long)]
        print_ledger: bool,
        #[command(flatten)]
        scan: ScanArgs,
    },
    /// Certify perfect divisibility, or look for minimal non-divisible graphs.
    Pd {
        #[arg(long)]
        minimal: bool,
        #[command(flatten)]
        scan: ScanArgs,
    },
    /// Colour every graph through perfect divisions.
    Color {
        /// Write one JSON certificate per graph to stdout.
        #[arg(long)]
        certify: bool,
        #[command(flatten)]
        scan: ScanArgs,
    },
    /// Test perfection.
    Perfect {
        #[arg(long, default_value = "cross")]
        mode: PerfectScanMode,
        #[command(flatten)]
        scan: ScanArgs,
    },
}

#[derive(Args)]
struct ScanArgs {
    /// Read the corpus from this file instead of stdin.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Comma-separated pattern tokens; the flag may repeat.
    #[arg(long, value_parser = parse_patterns)]
    free: Vec<Vec<PatternName>>,
    #[arg(long)]
    connected: bool,
    #[arg(long)]
    max_n: Option<usize>,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// PD cache file; defaults to $FORKDIV_CACHE, else in memory.
    #[arg(long)]
    cache: Option<PathBuf>,
    /// key = value file overriding caps and the audit rate.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    report: Option<PathBuf>,
    #[arg(long, default_value = "json")]
    format: ReportFormat,
    #[arg(long)]
    corpus_id: Option<String>,
}

fn parse_patterns(s: &str) -> Result<Vec<PatternName>, String> {
    parse_pattern_list(s).map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_INPUT) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Filter { free, connected, max_n } => filter(&free.concat(), connected, max_n),
        Command::Decompose { graph, json } => decompose(&graph, json),
        Command::Lemmas { tier, print_ledger, scan } => {
            if print_ledger {
                print!("{}", forkdiv::decomp::ledger_tsv());
                return Ok(0);
            }
            scan_command(ScanMode::Lemmas { tiers: tier }, scan, false)
        }
        Command::Pd { minimal, scan } => scan_command(ScanMode::Conjecture { minimal }, scan, false),
        Command::Color { certify, scan } => scan_command(ScanMode::Color, scan, certify),
        Command::Perfect { mode, scan } => scan_command(ScanMode::Perfect { mode }, scan, false),
    }
}

fn filter(free: &[PatternName], connected: bool, max_n: Option<usize>) -> Result<u8> {
    let filter = PatternFilter::new(free)?;
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let mut errors = 0;
    for (i, line) in io::stdin().lock().lines().enumerate() {
        let line = line.context("reading stdin")?;
        let text = line.trim();
        if text.is_empty() {
            continue;
        }
        match parse_graph6(text) {
            Err(e) => {
                errors += 1;
                eprintln!("line {}: {e}", i + 1);
            }
            Ok(g) => {
                if max_n.is_none_or(|m| g.n() <= m) && (!connected || g.is_connected()) && filter.accepts(&g) {
                    writeln!(out, "{text}")?;
                }
            }
        }
    }
    out.flush()?;
    Ok(if errors > 0 { EXIT_INPUT } else { 0 })
}

fn decompose(graph: &str, as_json: bool) -> Result<u8> {
    let g = parse_graph6(graph)?;
    let homogeneous = if g.n() >= 3 { find_homogeneous_set(&g)? } else { None };
    let mut contexts = Vec::new();
    for ctx in enumerate_hole_contexts(&g)? {
        let d = decompose_hole_neighborhood(&g, &ctx)?;
        contexts.push((ctx, d));
    }
    if as_json {
        let list: Vec<_> =
            contexts.iter().map(|(c, d)| json!({ "base": c.base, "hole": c.hole, "decomposition": d })).collect();
        let doc = json!({ "graph6": to_graph6(&g), "n": g.n(), "homogeneous_set": homogeneous, "contexts": list });
        println!("{}", serde_json::to_string_pretty(&doc)?);
    } else {
        println!("graph {} (n = {})", to_graph6(&g), g.n());
        match homogeneous {
            Some(x) => println!("homogeneous set {x}"),
            None => println!("no homogeneous set"),
        }
        for (c, d) in &contexts {
            println!("base {} hole {:?}", c.base, c.hole);
            println!("  M(C) {}  U {}  U' {}  residual {}", d.mc, d.u, d.u_prime, d.residual);
            let parts: Vec<String> = d.u_parts.iter().map(|p| p.to_string()).collect();
            println!("  U_i {}", parts.join(" "));
            println!("  Y {}  Y' {}  Z {}  Z' {}", d.y, d.y_prime, d.z, d.z_prime);
        }
        if contexts.is_empty() {
            println!("no odd hole lies in a non-neighbourhood");
        }
    }
    Ok(0)
}

fn scan_command(mode: ScanMode, args: ScanArgs, certify: bool) -> Result<u8> {
    let mut limits = Limits::default();
    if let Some(path) = &args.config {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        apply_config(&text, &mut limits)?;
    }
    let corpus = match &args.input {
        Some(p) => std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?,
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).context("reading stdin")?;
            s
        }
    };
    let cache_path = args.cache.clone().or_else(|| std::env::var_os(CACHE_ENV).map(PathBuf::from));
    let cache: Box<dyn PdCache> = match &cache_path {
        Some(p) => Box::new(FileCache::open(p)?),
        None => Box::new(MemoryCache::new()),
    };
    let corpus_id = args.corpus_id.clone().unwrap_or_else(|| match &args.input {
        Some(p) => p.display().to_string(),
        None => "stdin".into(),
    });
    let options = ScanOptions {
        corpus_id,
        free: args.free.concat(),
        connected: args.connected,
        max_n: args.max_n,
        jobs: args.jobs,
        limits,
    };
    let report = run_scan(mode, &corpus, &options, cache.as_ref())?;

    if certify {
        let stdout = io::stdout();
        let mut out = io::BufWriter::new(stdout.lock());
        for row in report.rows.iter().filter(|r| r.outcome == "colored") {
            let g = parse_graph6(&row.graph6)?;
            if let ColoringOutcome::Certified(c) = color_via_perfect_division_with(&g, &limits)? {
                writeln!(out, "{}", json!({ "graph6": row.graph6, "certificate": c }))?;
            }
        }
        out.flush()?;
    }
    match &args.report {
        Some(path) => emit_report(&report, args.format, path)?,
        None if !certify => summarize(&report, &mut io::stdout().lock())?,
        None => {}
    }
    if args.report.is_some() || certify {
        summarize(&report, &mut io::stderr().lock())?;
    }
    Ok(report.exit_code() as u8)
}

fn summarize(r: &ScanReport, out: &mut dyn Write) -> io::Result<()> {
    let t = &r.totals;
    writeln!(
        out,
        "{} scan of {}: {} lines, {} processed, {} filtered, {} over max n, {} disconnected, {} input errors",
        r.mode, r.corpus_id, t.corpus_size, t.processed, t.pattern_filtered, t.over_max_n, t.disconnected, t.input_errors
    )?;
    for (k, v) in &r.outcomes {
        writeln!(out, "  {k}: {v}")?;
    }
    for s in r.verdicts.iter().filter(|s| s.violated > 0) {
        writeln!(
            out,
            "  lemma {} (tier {}): {} violated, {} resolved, {} unresolved, {} report-only",
            s.lemma_id, s.tier, s.violated, s.resolved, s.unresolved, s.report_only
        )?;
    }
    for c in &r.counterexamples {
        writeln!(out, "  counterexample line {} {}: {}", c.line, c.graph6, c.reason)?;
    }
    for e in &r.input_errors {
        writeln!(out, "  input error line {}: {}", e.line, e.message)?;
    }
    writeln!(out, "  {:.1} ms", r.timing.total_ms)
}
