mod common;

use forkdiv::graph::{parse_edge_list, parse_graph6, to_edge_list, to_graph6};
use forkdiv::{Error, Graph};

#[test]
fn decodes_reference_table() {
    let table = common::fixture_text("reference_decode.tsv");
    let mut rows = 0;
    for line in table.lines().filter(|l| !l.trim().is_empty()) {
        let cols: Vec<&str> = line.split('\t').collect();
        let (code, n): (&str, usize) = (cols[0], cols[1].parse().unwrap());
        let edges: Vec<(usize, usize)> = cols
            .get(2)
            .map(|s| {
                s.split_whitespace()
                    .map(|e| {
                        let (u, v) = e.split_once('-').unwrap();
                        (u.parse().unwrap(), v.parse().unwrap())
                    })
                    .collect()
            })
            .unwrap_or_default();
        let g = parse_graph6(code).unwrap();
        assert_eq!(g, Graph::from_edges(n, &edges).unwrap(), "{code}");
        assert_eq!(to_graph6(&g), code);
        rows += 1;
    }
    assert!(rows >= 10);
}

#[test]
fn corpora_are_canonical_lines() {
    for name in ["graphs_n1-7.g6", "graphs_n8.g6", "forkfree_n8.g6", "forkfree_n9.g6"] {
        for line in common::fixture_lines(name) {
            assert_eq!(to_graph6(&parse_graph6(&line).unwrap()), line, "{name}");
        }
    }
}

#[test]
fn rejects_malformed_input() {
    for bad in ["", "D", "Dh", "D\x7f\x7f\x7f", "~~"] {
        assert!(matches!(parse_graph6(bad), Err(Error::Decode { .. })), "{bad:?}");
    }
}

#[test]
fn edge_list_round_trip() {
    let g = Graph::cycle(7).unwrap();
    let text = to_edge_list(&g);
    assert_eq!(parse_edge_list(&text).unwrap(), g);
}
