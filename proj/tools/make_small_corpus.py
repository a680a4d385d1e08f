#!/usr/bin/env python3
"""Writes every connected simple graph on 2, 4, 6 and 8 vertices, one graph6
line each, up to isomorphism.

Orders up to 7 come from the networkx graph atlas. Order 8 is built by adding
a vertex to each connected 7-vertex graph in every possible way (every
connected graph has a vertex whose removal keeps it connected), then removing
isomorphic duplicates.
"""
import sys
from collections import defaultdict
from itertools import combinations

import networkx as nx

EXPECTED = {2: 1, 4: 6, 6: 112, 8: 11117}  # connected graphs, OEIS A001349


def connected_atlas(n):
    return [g for g in nx.graph_atlas_g() if g.number_of_nodes() == n and nx.is_connected(g)]


def extend(graphs, n):
    buckets = defaultdict(list)
    for g in graphs:
        for k in range(1, n):
            for nbrs in combinations(range(n - 1), k):
                h = g.copy()
                h.add_node(n - 1)
                h.add_edges_from((n - 1, v) for v in nbrs)
                key = (tuple(sorted(d for _, d in h.degree())), nx.weisfeiler_lehman_graph_hash(h, iterations=3))
                bucket = buckets[key]
                if not any(nx.is_isomorphic(h, o) for o in bucket):
                    bucket.append(h)
    return [g for b in buckets.values() for g in b]


def main(path):
    out = []
    for n in (2, 4, 6):
        out.append((n, connected_atlas(n)))
    out.append((8, extend(connected_atlas(7), 8)))
    with open(path, "w") as f:
        for n, graphs in out:
            if len(graphs) != EXPECTED[n]:
                sys.exit(f"n={n}: {len(graphs)} graphs, expected {EXPECTED[n]}")
            lines = sorted(nx.to_graph6_bytes(nx.convert_node_labels_to_integers(g), header=False).decode().strip()
                           for g in graphs)
            f.write("\n".join(lines) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "tests/data/connected_even_le8.g6")
