"""Exhaustive generation of small connected graphs up to isomorphism.

Search over isomorphism classes: grow from a single edge by either adding
an edge between existing vertices or attaching a new leaf vertex, which
reaches every connected graph.  Deduplication buckets candidates by cheap
invariants and settles ties with networkx isomorphism tests.
"""

from collections import defaultdict
from itertools import combinations

import networkx as nx

from sphflex.graphs import Graph, build_graph


def _invariant(g: nx.Graph):
    degs = sorted(d for _, d in g.degree())
    tri = sum(nx.triangles(g).values())
    return (g.number_of_nodes(), g.number_of_edges(), tuple(degs), tri)


def connected_graphs(max_edges: int, max_vertices: int):
    """All connected graphs (one per isomorphism class) within the bounds.

    Includes the single-vertex graph.  Returned as sphflex Graphs with
    vertices 1..n.
    """
    seen: dict[tuple, list[nx.Graph]] = defaultdict(list)

    def register(g: nx.Graph) -> bool:
        key = _invariant(g)
        for other in seen[key]:
            if nx.is_isomorphic(g, other):
                return False
        seen[key].append(g.copy())
        return True

    k1 = nx.Graph()
    k1.add_node(0)
    register(k1)
    k2 = nx.path_graph(2)
    register(k2)
    frontier = [k2]
    while frontier:
        nxt = []
        for g in frontier:
            n, m = g.number_of_nodes(), g.number_of_edges()
            if m >= max_edges:
                continue
            candidates = []
            for a, b in combinations(g.nodes, 2):
                if not g.has_edge(a, b):
                    h = g.copy()
                    h.add_edge(a, b)
                    candidates.append(h)
            if n < max_vertices:
                for a in g.nodes:
                    h = g.copy()
                    h.add_edge(a, n)
                    candidates.append(h)
            for h in candidates:
                if register(h):
                    nxt.append(h)
        frontier = nxt

    out = []
    for bucket in seen.values():
        for g in bucket:
            mapping = {v: i + 1 for i, v in enumerate(sorted(g.nodes))}
            out.append(
                build_graph(
                    mapping.values(),
                    [(mapping[a], mapping[b]) for a, b in g.edges],
                )
            )
    out.sort(key=lambda g: (g.num_vertices, g.num_edges, g.edges))
    return out


def edge_count_histogram(graphs: list[Graph]) -> dict[int, int]:
    hist: dict[int, int] = defaultdict(int)
    for g in graphs:
        hist[g.num_edges] += 1
    return dict(hist)
