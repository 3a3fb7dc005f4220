#!/usr/bin/env python3
"""Regenerates the graph6 fixture corpora under tests/data/.

Requires networkx and pynauty (pip install networkx pynauty). Output is
sorted so reruns are byte-identical.

  graphs_le6.g6   all graphs of order 1..6        (208)
  connected7.g6   connected graphs of order 7     (853)
  connected8.g6   connected graphs of order 8     (11117)
  trees14.g6      trees of order 14               (3159)
"""
import itertools
import pathlib
import sys

import networkx as nx
import pynauty

OUT = pathlib.Path(__file__).resolve().parent.parent / "tests" / "data"


def g6(g):
    return nx.to_graph6_bytes(g, header=False).decode().strip()


def certificate(g):
    n = g.number_of_nodes()
    adj = {v: [u for u in g.neighbors(v)] for v in range(n)}
    return pynauty.certificate(pynauty.Graph(n, adjacency_dict=adj))


def atlas_by_order(n):
    return [g for g in nx.graph_atlas_g() if g.number_of_nodes() == n]


def connected_order8():
    seen = {}
    for base in atlas_by_order(7):
        for mask in range(1, 1 << 7):
            g = nx.Graph(base)
            g.add_node(7)
            g.add_edges_from((7, v) for v in range(7) if mask >> v & 1)
            if not nx.is_connected(g):
                continue
            c = certificate(g)
            if c not in seen:
                seen[c] = g
    return list(seen.values())


def write(name, graphs, expected):
    lines = sorted(g6(g) for g in graphs)
    if len(lines) != expected:
        sys.exit(f"{name}: got {len(lines)} graphs, expected {expected}")
    (OUT / name).write_text("\n".join(lines) + "\n")
    print(f"{name}: {len(lines)}")


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    le6 = [g for n in range(1, 7) for g in atlas_by_order(n)]
    write("graphs_le6.g6", le6, 208)
    write("connected7.g6", [g for g in atlas_by_order(7) if nx.is_connected(g)], 853)
    write("connected8.g6", connected_order8(), 11117)
    write("trees14.g6", list(nx.nonisomorphic_trees(14)), 3159)


if __name__ == "__main__":
    main()
