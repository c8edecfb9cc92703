"""Connected simple graphs with integer vertex labels.

Vertices are arbitrary non-negative integers.  Edges are unordered pairs,
normalized to ``(min, max)`` tuples.  Connectedness, absence of self-loops
and absence of multiedges are construction-time invariants: everything in
this package assumes them.

The complete bipartite graph on 3+3 vertices follows the convention that
odd labels ``{1, 3, 5}`` form one side and even labels ``{2, 4, 6}`` the
other.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator

from .errors import (
    DisconnectedError,
    DuplicateEdgeError,
    SelfLoopError,
    UnknownVertexError,
)

Edge = tuple[int, int]


def normalized_edge(a: int, b: int) -> Edge:
    """Unordered vertex pair as a sorted tuple.  Rejects loops."""
    if a == b:
        raise SelfLoopError(f"self-loop at vertex {a}")
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class Graph:
    """Immutable connected simple graph.  Build via :func:`build_graph`."""

    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]

    @cached_property
    def _adjacency(self) -> dict[int, tuple[int, ...]]:
        adj: dict[int, list[int]] = {v: [] for v in self.vertices}
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return {v: tuple(sorted(ns)) for v, ns in adj.items()}

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adjacency[v]

    def degree(self, v: int) -> int:
        return len(self._adjacency[v])

    def has_edge(self, a: int, b: int) -> bool:
        return a != b and normalized_edge(a, b) in self.edge_set

    def __contains__(self, v: int) -> bool:
        return v in self._adjacency


def _is_connected(vertices: Iterable[int], edges: Iterable[Edge]) -> bool:
    verts = list(vertices)
    if len(verts) <= 1:
        return True
    adj: dict[int, list[int]] = {v: [] for v in verts}
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    seen = {verts[0]}
    stack = [verts[0]]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(verts)


def build_graph(vertex_labels: Iterable[int], edge_pairs: Iterable[tuple[int, int]]) -> Graph:
    """Validate and build a graph.

    Raises ``SelfLoopError``, ``DuplicateEdgeError``, ``UnknownVertexError``
    or ``DisconnectedError`` on bad input.
    """
    vertices = tuple(sorted(set(vertex_labels)))
    vset = set(vertices)
    edges: list[Edge] = []
    seen: set[Edge] = set()
    for a, b in edge_pairs:
        e = normalized_edge(a, b)
        if e[0] not in vset or e[1] not in vset:
            raise UnknownVertexError(f"edge {e} references an undeclared vertex")
        if e in seen:
            raise DuplicateEdgeError(f"edge {e} appears more than once")
        seen.add(e)
        edges.append(e)
    if not _is_connected(vertices, edges):
        raise DisconnectedError("graph is not connected")
    return Graph(vertices, tuple(sorted(edges)))


def nonedges(g: Graph) -> set[Edge]:
    """All unordered pairs of distinct vertices that are not edges."""
    return {e for e in combinations(g.vertices, 2) if e not in g.edge_set}


def induced_subgraph(g: Graph, keep: Iterable[int]) -> Graph:
    """Subgraph induced on ``keep``; raises if the result is disconnected."""
    kept = set(keep)
    unknown = kept - set(g.vertices)
    if unknown:
        raise UnknownVertexError(f"vertices {sorted(unknown)} not in graph")
    edges = [e for e in g.edges if e[0] in kept and e[1] in kept]
    if not _is_connected(kept, edges):
        raise DisconnectedError("induced subgraph is not connected")
    return Graph(tuple(sorted(kept)), tuple(edges))


# ---------------------------------------------------------------------------
# minimal rigidity (Laman counts)
# ---------------------------------------------------------------------------


def _pebble_game_sparse(g: Graph) -> bool:
    """(2,3)-pebble game: True iff every subgraph on k vertices has <= 2k-3 edges."""
    pebbles = {v: 2 for v in g.vertices}
    out: dict[int, set[int]] = {v: set() for v in g.vertices}

    def pull_pebble(root: int, keep: set[int]) -> bool:
        # DFS along directed edges for a free pebble outside `keep`,
        # reversing the path so the pebble ends up on `root`.
        parent: dict[int, int | None] = {root: None}
        stack = [root]
        while stack:
            x = stack.pop()
            for y in list(out[x]):
                if y in parent:
                    continue
                parent[y] = x
                if pebbles[y] > 0 and y not in keep:
                    pebbles[y] -= 1
                    cur = y
                    while parent[cur] is not None:
                        p = parent[cur]
                        out[p].remove(cur)
                        out[cur].add(p)
                        cur = p
                    pebbles[root] += 1
                    return True
                stack.append(y)
        return False

    for a, b in g.edges:
        while pebbles[a] + pebbles[b] < 4:
            if not (pull_pebble(a, {a, b}) or pull_pebble(b, {a, b})):
                return False
        pebbles[a] -= 1
        out[a].add(b)
    return True


def is_laman(g: Graph) -> bool:
    """Minimal generic rigidity count: |E| = 2|V|-3 plus (2,3)-sparsity."""
    if g.num_edges != 2 * g.num_vertices - 3:
        return False
    return _pebble_game_sparse(g)


def forces_length_relation(g: Graph) -> bool:
    """True iff |E| > 2|V| - 4.

    With this many edges, any flexible spherical length assignment
    satisfies a nontrivial algebraic relation among the edge lengths.
    Minimally rigid graphs qualify, having 2|V| - 3 edges.
    """
    return g.num_edges > 2 * g.num_vertices - 4


def is_laman_naive(g: Graph) -> bool:
    """Oracle variant of :func:`is_laman` by exhaustive subgraph counting.

    Exponential in |V|; intended for cross-checking on small graphs.
    """
    n = g.num_vertices
    if g.num_edges != 2 * n - 3:
        return False
    for k in range(2, n + 1):
        for subset in combinations(g.vertices, k):
            sub = set(subset)
            m = sum(1 for a, b in g.edges if a in sub and b in sub)
            if m > 2 * k - 3:
                return False
    return True


# ---------------------------------------------------------------------------
# named graphs
# ---------------------------------------------------------------------------


def complete_bipartite(left: Iterable[int], right: Iterable[int]) -> Graph:
    left = tuple(left)
    right = tuple(right)
    return build_graph(left + right, [(a, b) for a in left for b in right])


def k33() -> Graph:
    """K(3,3) with odd labels on one side and even labels on the other."""
    return complete_bipartite((1, 3, 5), (2, 4, 6))


def k22() -> Graph:
    """The 4-cycle 1-2-3-4 as K(2,2) with odd/even sides."""
    return complete_bipartite((1, 3), (2, 4))


def k32() -> Graph:
    return complete_bipartite((1, 3, 5), (2, 4))


def k44() -> Graph:
    return complete_bipartite((1, 3, 5, 7), (2, 4, 6, 8))


def complete(n: int) -> Graph:
    verts = range(1, n + 1)
    return build_graph(verts, combinations(verts, 2))


def triangle() -> Graph:
    return complete(3)


def path_graph(n: int) -> Graph:
    verts = range(1, n + 1)
    return build_graph(verts, [(i, i + 1) for i in range(1, n)])


def cycle_graph(n: int) -> Graph:
    verts = range(1, n + 1)
    return build_graph(verts, [(i, i % n + 1) for i in range(1, n + 1)])


def star(leaves: int) -> Graph:
    return build_graph(range(leaves + 1), [(0, i) for i in range(1, leaves + 1)])


def apex_double_triangle() -> Graph:
    """Two triangles glued along edge 2-3, plus an apex 5 joined to 1 and 4.

    The smallest minimally rigid graph whose edge set splits into a
    no-alternating-path coloring (five inner edges against the two apex
    edges); the pole construction then collapses vertices 1 and 4.
    """
    return build_graph(
        range(1, 6),
        [(1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (1, 5), (4, 5)],
    )


def three_prism() -> Graph:
    """Triangles 1-3-5 and 2-4-6 joined by the matching 1-2, 3-4, 5-6."""
    return build_graph(
        range(1, 7),
        [(1, 3), (3, 5), (1, 5), (2, 4), (4, 6), (2, 6), (1, 2), (3, 4), (5, 6)],
    )


def connected_subgraph_vertex_sets(g: Graph) -> Iterator[tuple[int, ...]]:
    """Vertex subsets (size >= 1) that induce connected subgraphs."""
    for k in range(1, g.num_vertices + 1):
        for subset in combinations(g.vertices, k):
            sub = set(subset)
            edges = [e for e in g.edges if e[0] in sub and e[1] in sub]
            if _is_connected(sub, edges):
                yield subset
