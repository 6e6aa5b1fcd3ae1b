#![allow(dead_code)]

use std::path::PathBuf;

use forkdiv::graph::parse_graph6;
use forkdiv::patterns::{is_free_of, PatternName};
use forkdiv::Graph;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

pub fn fixture_text(name: &str) -> String {
    std::fs::read_to_string(fixture(name)).unwrap_or_else(|e| panic!("reading fixture {name}: {e}"))
}

pub fn fixture_lines(name: &str) -> Vec<String> {
    fixture_text(name).lines().map(str::trim).filter(|l| !l.is_empty()).map(String::from).collect()
}

pub fn fixture_graphs(name: &str) -> Vec<Graph> {
    fixture_lines(name).iter().map(|l| parse_graph6(l).unwrap()).collect()
}

/// Every fork-free graph on 1..=max_n vertices (max_n <= 9), as graph6 lines.
pub fn fork_free_upto(max_n: usize) -> Vec<String> {
    let mut out: Vec<String> = fixture_lines("graphs_n1-7.g6")
        .into_iter()
        .filter(|l| {
            let g = parse_graph6(l).unwrap();
            g.n() <= max_n && is_free_of(&g, PatternName::Fork).unwrap()
        })
        .collect();
    if max_n >= 8 {
        out.extend(fixture_lines("forkfree_n8.g6"));
    }
    if max_n >= 9 {
        out.extend(fixture_lines("forkfree_n9.g6"));
    }
    out
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn random_perm<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// Whole-subset tables computed by plain enumeration, sharing no code with
/// the library's oracles.
pub struct Brute {
    n: usize,
    pub omega: Vec<usize>,
    pub chi: Vec<usize>,
    pub perfect: Vec<bool>,
}

impl Brute {
    pub fn new(g: &Graph) -> Self {
        let n = g.n();
        let adj: Vec<u64> = (0..n)
            .map(|u| (0..n).filter(|&v| v != u && g.has_edge(u, v)).fold(0, |m, v| m | 1 << v))
            .collect();
        let size = 1usize << n;
        let is_clique = |s: u64| (0..n).all(|v| s >> v & 1 == 0 || (s & !(1 << v)) & !adj[v] == 0);
        let is_stable = |s: u64| (0..n).all(|v| s >> v & 1 == 0 || s & adj[v] == 0);
        let mut omega = vec![0; size];
        for s in 0..size as u64 {
            omega[s as usize] =
                (0..size as u64).filter(|&t| t & !s == 0 && is_clique(t)).map(|t| t.count_ones()).max().unwrap() as usize;
        }
        // chi[S] = 1 + min over nonempty stable T ⊆ S of chi[S \ T]
        let mut chi = vec![0; size];
        for s in 1..size as u64 {
            let mut best = usize::MAX;
            let mut t = s;
            while t > 0 {
                if is_stable(t) {
                    best = best.min(1 + chi[(s & !t) as usize]);
                }
                t = (t - 1) & s;
            }
            chi[s as usize] = best;
        }
        let mut perfect = vec![true; size];
        for s in 0..size {
            perfect[s] = chi[s] == omega[s] && (0..n).all(|v| s >> v & 1 == 0 || perfect[s & !(1 << v)]);
        }
        Brute { n, omega, chi, perfect }
    }

    pub fn has_division(&self, s: u64) -> bool {
        let mut a = s;
        loop {
            if self.perfect[a as usize] && self.omega[(s & !a) as usize] < self.omega[s as usize] {
                return true;
            }
            if a == 0 {
                return false;
            }
            a = (a - 1) & s;
        }
    }

    pub fn pd(&self) -> bool {
        (1..1u64 << self.n).all(|s| self.has_division(s))
    }
}
