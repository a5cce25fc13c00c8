#!/usr/bin/env python3
"""Generate the cached graph6 corpora under tests/data/.

networkx plays the external-generator role: its atlas supplies every graph
on up to 7 vertices, vertex augmentation plus isomorphism dedup extends
that to all connected graphs on 8 vertices, and its planarity test selects
the graphs each corpus declares planar. The library under test never
checks planarity itself; these files are the trusted input it consumes.

Counts are asserted against the published enumeration sequences, so a bug
in the augmentation or the dedup cannot slip through silently.

Usage: python tools/gen_corpora.py [outdir]
"""

import sys
import time
from collections import defaultdict
from itertools import combinations
from pathlib import Path

import networkx as nx
from networkx.generators.atlas import graph_atlas_g

CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}
PLANAR_CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 20, 6: 99, 7: 646, 8: 5974}


def g6(graph: nx.Graph) -> str:
    return nx.to_graph6_bytes(graph, header=False).decode("ascii").strip()


def invariant_key(graph: nx.Graph):
    tri = nx.triangles(graph)
    per_vertex = sorted(
        (graph.degree(v), tri[v], tuple(sorted(graph.degree(w) for w in graph[v])))
        for v in graph)
    return graph.number_of_nodes(), graph.number_of_edges(), tuple(per_vertex)


class IsoStore:
    """Set of graphs up to isomorphism: invariant buckets + VF2 inside."""

    def __init__(self):
        self.buckets: dict = defaultdict(list)
        self.count = 0

    def add(self, graph: nx.Graph) -> bool:
        key = invariant_key(graph)
        bucket = self.buckets[key]
        for rep in bucket:
            if nx.is_isomorphic(rep, graph):
                return False
        bucket.append(graph)
        self.count += 1
        return True

    def graphs(self):
        for key in sorted(self.buckets):
            yield from self.buckets[key]


def connected_graphs_upto_7():
    by_n: dict[int, list[nx.Graph]] = defaultdict(list)
    for graph in graph_atlas_g():
        n = graph.number_of_nodes()
        if n >= 1 and nx.is_connected(graph):
            by_n[n].append(graph)
    return by_n


def all_graphs_on_7():
    return [g for g in graph_atlas_g() if g.number_of_nodes() == 7]


def connected_graphs_on_8(seven: list[nx.Graph]) -> list[nx.Graph]:
    """Every connected 8-vertex graph arises from some 7-vertex graph by
    adding a vertex whose neighborhood touches all components."""
    store = IsoStore()
    t0 = time.time()
    candidates = 0
    for base in seven:
        comps = [set(c) for c in nx.connected_components(base)]
        verts = sorted(base)
        for r in range(1, 8):
            for subset in combinations(verts, r):
                ss = set(subset)
                if any(not (ss & comp) for comp in comps):
                    continue
                candidates += 1
                g = base.copy()
                g.add_node(7)
                g.add_edges_from((7, u) for u in subset)
                store.add(g)
    print(f"  augmentation: {candidates} candidates -> {store.count} classes "
          f"({time.time() - t0:.1f}s)")
    return sorted(store.graphs(), key=g6)


def write_corpus(path: Path, graphs) -> None:
    lines = sorted(g6(g) for g in graphs)
    path.write_text("\n".join(lines) + ("\n" if lines else ""), encoding="ascii")
    print(f"  wrote {path.name}: {len(lines)} graphs")


def triangle_free_planar_families() -> list[nx.Graph]:
    """Hand-picked connected triangle-free planar graphs with 9..12 vertices."""
    out = []
    for n in (9, 10, 11, 12):
        out.append(nx.cycle_graph(n))
        out.append(nx.path_graph(n))
        out.append(nx.star_graph(n - 1))
    out.append(nx.grid_2d_graph(3, 3))
    out.append(nx.grid_2d_graph(3, 4))
    out.append(nx.grid_2d_graph(2, 5))
    out.append(nx.grid_2d_graph(2, 6))
    out.append(nx.complete_bipartite_graph(2, 7))
    out.append(nx.complete_bipartite_graph(2, 8))
    out.append(nx.complete_bipartite_graph(2, 10))
    out.append(nx.complete_bipartite_graph(3, 3))  # K33 is nonplanar; filtered below
    out.append(nx.circular_ladder_graph(5))  # pentagonal prism
    out.append(nx.circular_ladder_graph(6))  # hexagonal prism
    # one-step subdivision of K4: triangle-free, planar, girth 6
    k4sub = nx.Graph()
    next_v = 4
    for u, v in combinations(range(4), 2):
        k4sub.add_edge(u, next_v)
        k4sub.add_edge(next_v, v)
        next_v += 1
    out.append(k4sub)
    # theta graph: two hubs joined by three length-4 paths
    theta = nx.Graph()
    nid = 2
    for _ in range(3):
        prev = 0
        for _ in range(3):
            theta.add_edge(prev, nid)
            prev = nid
            nid += 1
        theta.add_edge(prev, 1)
    out.append(theta)
    # binary tree on 12 vertices
    out.append(nx.balanced_tree(2, 2).subgraph(range(7)).copy())
    kept = []
    for g in out:
        g = nx.convert_node_labels_to_integers(g, ordering="sorted")
        n = g.number_of_nodes()
        if not (9 <= n <= 12):
            continue
        if not nx.is_connected(g):
            continue
        if sum(nx.triangles(g).values()) != 0:
            continue
        if not nx.check_planarity(g)[0]:
            continue
        kept.append(g)
    return kept


def main(outdir: str) -> None:
    data = Path(outdir)
    data.mkdir(parents=True, exist_ok=True)

    print("collecting atlas graphs (n <= 7)")
    by_n = connected_graphs_upto_7()
    for n in range(1, 8):
        assert len(by_n[n]) == CONNECTED_COUNTS[n], (n, len(by_n[n]))

    print("augmenting to n = 8")
    by_n[8] = connected_graphs_on_8(all_graphs_on_7())
    assert len(by_n[8]) == CONNECTED_COUNTS[8], len(by_n[8])

    planar_by_n: dict[int, list[nx.Graph]] = {}
    tfree_planar: list[nx.Graph] = []
    for n in range(1, 9):
        planar_by_n[n] = [g for g in by_n[n] if nx.check_planarity(g)[0]]
        assert len(planar_by_n[n]) == PLANAR_CONNECTED_COUNTS[n], \
            (n, len(planar_by_n[n]))
        tfree_planar.extend(
            g for g in planar_by_n[n] if sum(nx.triangles(g).values()) == 0)

    print("writing corpora")
    for n in range(1, 9):
        write_corpus(data / f"connected_n{n}.g6", by_n[n])
        write_corpus(data / f"planar_connected_n{n}.g6", planar_by_n[n])

    families = triangle_free_planar_families()
    store = IsoStore()
    tf_all = []
    for g in tfree_planar + families:
        if store.add(g):
            tf_all.append(g)
    write_corpus(data / "triangle_free_planar_upto12.g6", tf_all)
    print("done")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "tests/data")
