#!/usr/bin/env python3
"""Regenerate the committed graph6 corpora under fixtures/.

Uses nauty (through pynauty) for isomorphism rejection and networkx for
graph6 encoding, so the fixtures are independent of the Rust code they test.

    pip install pynauty networkx
    python3 scripts/gen_fixtures.py
"""
import itertools
import os
import sys

import networkx as nx
import pynauty

OUT = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "fixtures")

# Expected number of graphs on n vertices up to isomorphism (OEIS A000088).
ALL_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}

PAIRS5 = list(itertools.combinations(range(5), 2))


def fork_patterns():
    """10-bit induced edge patterns on 5 labelled vertices that form a fork."""
    fork = nx.Graph([(0, 1), (0, 2), (0, 3), (3, 4)])
    pats = set()
    for perm in itertools.permutations(range(5)):
        h = nx.relabel_nodes(fork, dict(enumerate(perm)))
        bits = 0
        for k, (a, b) in enumerate(PAIRS5):
            if h.has_edge(a, b):
                bits |= 1 << k
        pats.add(bits)
    return pats


FORKS = fork_patterns()


def certificate(n, adj):
    g = pynauty.Graph(n, adjacency_dict={v: [w for w in range(n) if adj[v] >> w & 1] for v in range(n)})
    return pynauty.certificate(g), g


def canonical_rows(n, adj, g):
    lab = pynauty.canon_label(g)  # lab[i] = original vertex placed at position i
    pos = {v: i for i, v in enumerate(lab)}
    rows = [0] * n
    for v in range(n):
        for w in range(n):
            if adj[v] >> w & 1:
                rows[pos[v]] |= 1 << pos[w]
    return tuple(rows)


def forbidden_masks(n_old, adj):
    """Neighbourhood masks for a new vertex that would create a fork through it."""
    bad = bytearray(1 << n_old)
    for quad in itertools.combinations(range(n_old), 4):
        verts = list(quad) + [n_old]
        base = 0
        for k, (a, b) in enumerate(PAIRS5):
            if b == 4:
                continue
            if adj[verts[a]] >> verts[b] & 1:
                base |= 1 << k
        new_bits = [k for k, (a, b) in enumerate(PAIRS5) if b == 4]
        rest = [w for w in range(n_old) if w not in quad]
        for m4 in range(16):
            bits = base
            for j in range(4):
                if m4 >> j & 1:
                    bits |= 1 << new_bits[j]
            if bits not in FORKS:
                continue
            core = 0
            for j in range(4):
                if m4 >> j & 1:
                    core |= 1 << quad[j]
            for r in range(1 << len(rest)):
                m = core
                for j, w in enumerate(rest):
                    if r >> j & 1:
                        m |= 1 << w
                bad[m] = 1
    return bad


def extend(graphs, n_old, fork_free):
    seen = {}
    for adj in graphs:
        bad = forbidden_masks(n_old, adj) if fork_free else None
        for mask in range(1 << n_old):
            if bad is not None and bad[mask]:
                continue
            new = list(adj) + [mask]
            for w in range(n_old):
                if mask >> w & 1:
                    new[w] |= 1 << n_old
            cert, g = certificate(n_old + 1, new)
            if cert not in seen:
                seen[cert] = canonical_rows(n_old + 1, new, g)
    return sorted(seen.values())


def to_g6(rows):
    n = len(rows)
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from((v, w) for v in range(n) for w in range(v + 1, n) if rows[v] >> w & 1)
    return nx.to_graph6_bytes(g, header=False).decode().strip()


def write(name, lines):
    with open(os.path.join(OUT, name), "w") as f:
        for line in lines:
            f.write(line + "\n")
    print(f"{name}: {len(lines)} graphs", file=sys.stderr)


def main():
    os.makedirs(OUT, exist_ok=True)
    layers = {1: [(0,)]}
    for n in range(2, 9):
        layers[n] = extend(layers[n - 1], n - 1, fork_free=False)
    for n, expected in ALL_COUNTS.items():
        assert len(layers[n]) == expected, (n, len(layers[n]), expected)
    write("graphs_n1-7.g6", [to_g6(r) for n in range(1, 8) for r in layers[n]])
    write("graphs_n8.g6", [to_g6(r) for r in layers[8]])

    ff = {4: layers[4]}
    for n in range(5, 10):
        ff[n] = extend(ff[n - 1], n - 1, fork_free=True)
    # the fork is the only 5-vertex graph dropped at n = 5
    assert len(ff[5]) == ALL_COUNTS[5] - 1
    write("forkfree_n8.g6", [to_g6(r) for r in ff[8]])
    write("forkfree_n9.g6", [to_g6(r) for r in ff[9]])

    # reference decodes: graph6 line -> sorted edge list, produced by networkx
    ref = ["DhC", "Dhc", "Bw", "@", "A?", "A_"]
    ref += [to_g6(r) for r in layers[6][::17]]
    with open(os.path.join(OUT, "reference_decode.tsv"), "w") as f:
        for line in ref:
            g = nx.from_graph6_bytes(line.encode())
            edges = " ".join(f"{a}-{b}" for a, b in sorted(tuple(sorted(e)) for e in g.edges()))
            f.write(f"{line}\t{g.number_of_nodes()}\t{edges}\n")


if __name__ == "__main__":
    main()
