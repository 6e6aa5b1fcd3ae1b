mod common;

use forkdiv::decomp::{decompose_hole_neighborhood, enumerate_hole_contexts};
use forkdiv::divisibility::{
    color_via_perfect_division, fast_path_division, find_perfect_division, is_perfectly_divisible, ColoringOutcome,
    MemoryCache,
};
use forkdiv::graph::{canonical_form, parse_graph6, to_graph6};
use forkdiv::patterns::{is_perfect, PerfectionMode};
use forkdiv::{Graph, VertexSet};

use common::Brute;
use proptest::prelude::*;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn relabeled_strategy(max_n: usize) -> impl Strategy<Value = (Graph, Graph)> {
    graph_strategy(max_n).prop_flat_map(|g| {
        let n = g.n();
        Just((0..n).collect::<Vec<_>>()).prop_shuffle().prop_map(move |p| (g.clone(), g.relabel(&p).unwrap()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn perfection_modes_match_enumeration(g in graph_strategy(8)) {
        let b = Brute::new(&g);
        let full = (1usize << g.n()) - 1;
        prop_assert_eq!(is_perfect(&g, PerfectionMode::Spgt).unwrap().perfect, b.perfect[full]);
        prop_assert_eq!(is_perfect(&g, PerfectionMode::Brute).unwrap().perfect, b.perfect[full]);
    }

    #[test]
    fn pd_matches_memo_free_oracle(g in graph_strategy(7)) {
        let b = Brute::new(&g);
        let st = is_perfectly_divisible(&g, &MemoryCache::new()).unwrap();
        prop_assert_eq!(st.is_pd(), b.pd(), "{}", to_graph6(&g));
    }

    #[test]
    fn recursion_identity(g in graph_strategy(7)) {
        let cache = MemoryCache::new();
        let whole = is_perfectly_divisible(&g, &cache).unwrap().is_pd();
        let here = find_perfect_division(&g).unwrap().is_some();
        let below = g.n() == 1
            || (0..g.n()).all(|v| is_perfectly_divisible(&g.delete_vertex(v).unwrap(), &cache).unwrap().is_pd());
        prop_assert_eq!(whole, here && below);
    }

    #[test]
    fn division_certificates_recheck(g in graph_strategy(9)) {
        let b = Brute::new(&g);
        let full = (1u64 << g.n()) - 1;
        match find_perfect_division(&g).unwrap() {
            Some(c) => {
                c.validate(&g).unwrap();
                prop_assert!(b.perfect[c.a.bits() as usize]);
                prop_assert!(b.omega[c.b.bits() as usize] < b.omega[full as usize]);
            }
            None => prop_assert!(!b.has_division(full)),
        }
    }

    #[test]
    fn fast_path_sound(g in graph_strategy(10)) {
        for v in 0..g.n() {
            let m = g.non_neighborhood(v);
            let m_perfect =
                m.is_empty() || is_perfect(&g.induced_subgraph(m).unwrap(), PerfectionMode::Brute).unwrap().perfect;
            match fast_path_division(&g, v).unwrap() {
                Some(c) => {
                    prop_assert!(m_perfect);
                    prop_assert_eq!(c.a, m.with(v));
                    prop_assert_eq!(c.b, g.neighbors(v));
                    c.validate(&g).unwrap();
                }
                None => prop_assert!(!m_perfect),
            }
        }
    }

    #[test]
    fn coloring_proper_and_bounded(g in graph_strategy(9)) {
        let b = Brute::new(&g);
        let full = (1usize << g.n()) - 1;
        if let ColoringOutcome::Certified(c) = color_via_perfect_division(&g).unwrap() {
            c.validate(&g).unwrap();
            for u in 0..g.n() {
                for v in g.neighbors(u) {
                    prop_assert_ne!(c.colors[u], c.colors[v]);
                }
            }
            let omega = b.omega[full];
            prop_assert!(c.count <= omega * (omega + 1) / 2);
            prop_assert!(c.count >= b.chi[full]);
        }
    }

    #[test]
    fn canonical_form_invariant((g, h) in relabeled_strategy(10)) {
        let (cg, ch) = (canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        prop_assert_eq!(&cg, &ch);
        let back = parse_graph6(cg.as_str()).unwrap();
        prop_assert_eq!(canonical_form(&back).unwrap(), cg);
    }

    #[test]
    fn graph6_round_trip(g in graph_strategy(20)) {
        prop_assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn decomposition_partitions_vertices(g in graph_strategy(9)) {
        for ctx in enumerate_hole_contexts(&g).unwrap() {
            let d = decompose_hole_neighborhood(&g, &ctx).unwrap();
            let c = d.hole_set();
            let nmc = d.u | d.u_prime | d.residual;
            let outer = d.z | d.z_prime;
            prop_assert!(d.mc.contains(ctx.base));
            prop_assert_eq!(c | d.mc | nmc | outer, g.vertices());
            let total = c.len() + d.mc.len() + nmc.len() + outer.len();
            prop_assert_eq!(total, g.n());
            let mut seen = VertexSet::EMPTY;
            for p in &d.u_parts {
                prop_assert!(!p.intersects(seen));
                seen |= *p;
            }
            prop_assert_eq!(seen, d.u);
            prop_assert_eq!(d.u.len() + d.u_prime.len() + d.residual.len(), nmc.len());
            prop_assert!(!d.z.intersects(d.z_prime));
            prop_assert!(d.y.is_subset(d.y_prime) && d.y_prime.is_subset(d.mc));
            for x in d.mc {
                prop_assert!(!g.neighbors(x).intersects(c));
            }
        }
    }
}
