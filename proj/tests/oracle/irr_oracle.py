#!/usr/bin/env python3
"""Brute-force oracle used to freeze expected values in the C++ tests.

Independent of the C++ code: irredundance is checked straight from the
private-neighbour definition over all 2^n subsets, IR-graph edges from the
symmetric-difference definition, shapes via networkx isomorphism.

    python3 tests/oracle/irr_oracle.py corpus   # regenerate tests/data/*.g6
    python3 tests/oracle/irr_oracle.py facts    # print frozen values
"""
import itertools
import sys
from pathlib import Path

import networkx as nx

DATA = Path(__file__).resolve().parent.parent / "data"


def closed_nbhd(adj, v):
    return adj[v] | {v}


def private_nbhd(adj, d, v):
    others = set()
    for w in d:
        if w != v:
            others |= closed_nbhd(adj, w)
    return closed_nbhd(adj, v) - others


def irredundant(adj, d):
    return all(private_nbhd(adj, d, v) for v in d)


def ir_sets(adj):
    n = len(adj)
    best, sets = 0, []
    for mask in range(1 << n):
        d = {i for i in range(n) if mask >> i & 1}
        if not irredundant(adj, d):
            continue
        if len(d) > best:
            best, sets = len(d), []
        if len(d) == best:
            sets.append(tuple(sorted(d)))
    return best, sorted(sets)


def ir_graph(adj, sets):
    h = nx.Graph()
    h.add_nodes_from(range(len(sets)))
    for i, j in itertools.combinations(range(len(sets)), 2):
        a, b = set(sets[i]), set(sets[j])
        if len(a ^ b) == 2:
            (u,), (v,) = a - b, b - a
            if v in adj[u]:
                h.add_edge(i, j)
    return h


def adj_of(n, edges):
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def gprime():
    return adj_of(6, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 5), (4, 5)])


def gn(n):
    a = lambda i: 1 + i
    b = lambda i: 1 + n + i
    c = lambda i: 1 + 2 * n + i
    d = lambda i: 1 + 3 * n + i
    e = [(0, 1)]
    e += [(0, a(i)) for i in range(1, n + 1)]
    e += [(1, b(i)) for i in range(1, n + 1)]
    e += [(a(i), b(j)) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    for i in range(1, n + 1):
        e += [(a(i), c(i)), (c(i), b(i)), (b(i), d(i)), (d(i), a(i))]
    return adj_of(4 * n + 2, e)


def write_corpus():
    DATA.mkdir(exist_ok=True)
    lines = {"all": [], "connected": []}
    for g in nx.graph_atlas_g():
        if g.number_of_nodes() == 0:
            continue
        code = nx.to_graph6_bytes(g, header=False).decode().strip()
        lines["all"].append(code)
        if nx.is_connected(g):
            lines["connected"].append(code)
    (DATA / "atlas_order1to7.g6").write_text("\n".join(lines["all"]) + "\n")
    (DATA / "atlas_connected_order1to7.g6").write_text("\n".join(lines["connected"]) + "\n")
    print(len(lines["all"]), len(lines["connected"]))


def facts():
    adj = gprime()
    best, sets = ir_sets(adj)
    h = ir_graph(adj, sets)
    print("G' IR", best, "sets", sets)
    print("G' IR-graph edges", sorted(h.edges()), "tree", nx.is_tree(h), "diam", nx.diameter(h))
    for n in range(1, 5):
        adj = gn(n)
        best, sets = ir_sets(adj)
        h = ir_graph(adj, sets)
        ds = nx.Graph([(0, i) for i in range(1, 2 * n + 1)] + [(0, 2 * n + 1)] +
                      [(2 * n + 1, 2 * n + 2 + i) for i in range(2 * n)])
        print(f"G_{n}: IR={best} sets={len(sets)} |E(H)|={h.number_of_edges()} "
              f"iso S(2n,2n)={nx.is_isomorphic(h, ds)} edges(G)={sum(map(len, adj)) // 2}")
    print("G_1 sets", ir_sets(gn(1))[1])
    for n in range(1, 6):
        adj = [set(range(n)) - {i} for i in range(n)]
        best, sets = ir_sets(adj)
        print(f"K_{n}: IR={best} H iso K_n={nx.is_isomorphic(ir_graph(adj, sets), nx.complete_graph(n))}")

    # conjecture / tree audit sweep over connected graphs of order <= 6 and <= 7
    for limit in (6, 7):
        paths3 = cycles5 = 0
        diam3_trees = []
        shapes = {}
        for g in nx.graph_atlas_g():
            n = g.number_of_nodes()
            if n == 0 or n > limit or not nx.is_connected(g):
                continue
            adj = [set(g[v]) for v in range(n)]
            _, sets = ir_sets(adj)
            h = ir_graph(adj, sets)
            if nx.is_isomorphic(h, nx.path_graph(3)):
                paths3 += 1
            if nx.is_isomorphic(h, nx.cycle_graph(5)):
                cycles5 += 1
            if nx.is_tree(h) and nx.diameter(h) == 3:
                diam3_trees.append(nx.to_graph6_bytes(g, header=False).decode().strip())
        print(f"connected order<={limit}: P3 matches={paths3} C5 matches={cycles5} "
              f"diam-3 IR-trees={len(diam3_trees)} {diam3_trees[:10]}")


if __name__ == "__main__":
    {"corpus": write_corpus, "facts": facts}[sys.argv[1]]()
