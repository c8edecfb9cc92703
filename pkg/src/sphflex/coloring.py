"""Two-color edge colorings and the flexibility predicates built on them.

A coloring is *surjective* if both colors occur.  It has *no alternating
path* (NAP) if no walk over three edges is colored same-opposite-same;
equivalently, every edge has an endpoint whose incident edges all share one
color.  NAP-colorings certify flexibility on the sphere; the weaker
*no almost cycle* (NAC) condition certifies flexibility in the plane.

Alternating walks are allowed to close up (first and last vertex equal):
a triangle colored red-blue-red contains one.  This is what makes the walk
formulation agree with the local mono-endpoint criterion.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional

from .errors import BudgetExceededError, NotNapError
from .graphs import Edge, Graph, normalized_edge

RED = "red"
BLUE = "blue"

MAX_ENUM_EDGES = 25


@dataclass(frozen=True)
class EdgeColoring:
    """Total two-coloring of a graph's edges.

    Stored as a bitmask over ``graph.edges`` order (bit set = red), which
    keeps enumeration over all colorings cheap.
    """

    graph: Graph
    mask: int

    @classmethod
    def from_colors(cls, graph: Graph, colors: dict[Edge, str]) -> "EdgeColoring":
        mask = 0
        for i, e in enumerate(graph.edges):
            try:
                c = colors[e]
            except KeyError:
                raise KeyError(f"edge {e} has no color") from None
            if c == RED:
                mask |= 1 << i
            elif c != BLUE:
                raise ValueError(f"unknown color {c!r}")
        if len(colors) != len(graph.edges):
            extra = set(colors) - set(graph.edges)
            raise KeyError(f"colors given for non-edges {sorted(extra)}")
        return cls(graph, mask)

    @classmethod
    def from_red_edges(cls, graph: Graph, red_edges: Iterable[tuple[int, int]]) -> "EdgeColoring":
        red = {normalized_edge(a, b) for a, b in red_edges}
        return cls.from_colors(graph, {e: (RED if e in red else BLUE) for e in graph.edges})

    def color(self, a: int, b: int) -> str:
        e = normalized_edge(a, b)
        i = self.graph.edges.index(e)
        return RED if self.mask >> i & 1 else BLUE

    @cached_property
    def colors(self) -> dict[Edge, str]:
        return {
            e: (RED if self.mask >> i & 1 else BLUE)
            for i, e in enumerate(self.graph.edges)
        }

    def red_edges(self) -> tuple[Edge, ...]:
        return tuple(e for i, e in enumerate(self.graph.edges) if self.mask >> i & 1)

    def blue_edges(self) -> tuple[Edge, ...]:
        return tuple(e for i, e in enumerate(self.graph.edges) if not self.mask >> i & 1)

    def swapped(self) -> "EdgeColoring":
        full = (1 << len(self.graph.edges)) - 1
        return EdgeColoring(self.graph, self.mask ^ full)

    def canonical_mask(self) -> int:
        """Smaller of the coloring's mask and its color-swapped mask."""
        full = (1 << len(self.graph.edges)) - 1
        return min(self.mask, self.mask ^ full)


@dataclass(frozen=True)
class ColoringSet:
    colorings: tuple[EdgeColoring, ...]
    modulo_swap: bool

    def __len__(self) -> int:
        return len(self.colorings)

    def __iter__(self):
        return iter(self.colorings)


def _vertex_edge_masks(g: Graph) -> dict[int, int]:
    masks = {v: 0 for v in g.vertices}
    for i, (a, b) in enumerate(g.edges):
        masks[a] |= 1 << i
        masks[b] |= 1 << i
    return masks


def _is_nap_mask(g: Graph, mask: int, vmasks: dict[int, int]) -> bool:
    full = (1 << len(g.edges)) - 1
    if mask == 0 or mask == full:
        return False  # not surjective
    mono = {v: (mask & vm == 0 or mask & vm == vm) for v, vm in vmasks.items()}
    return all(mono[a] or mono[b] for a, b in g.edges)


def is_surjective(c: EdgeColoring) -> bool:
    full = (1 << len(c.graph.edges)) - 1
    return full != 0 and c.mask not in (0, full)


def is_nap(c: EdgeColoring) -> bool:
    """True iff surjective and free of alternating 3-edge walks.

    Uses the local criterion: every edge must have an endpoint all of whose
    incident edges share one color.
    """
    return _is_nap_mask(c.graph, c.mask, _vertex_edge_masks(c.graph))


def find_alternating_path(c: EdgeColoring) -> Optional[tuple[int, int, int, int]]:
    """A walk (v, w, z, t) colored same-opposite-same, or None.

    Consecutive vertices are distinct and the three edges are distinct, but
    v = t is allowed (closed walk).  Kept as the definition-level oracle for
    :func:`is_nap`.
    """
    g = c.graph
    colors = c.colors
    for w, z in g.edges:
        mid = colors[(w, z)]
        for a, b in ((w, z), (z, w)):
            for v in g.neighbors(a):
                if v == b or colors[normalized_edge(v, a)] == mid:
                    continue
                for t in g.neighbors(b):
                    if t == a or colors[normalized_edge(b, t)] == mid:
                        continue
                    return (v, a, b, t)
    return None


def is_nac(c: EdgeColoring) -> bool:
    """True iff surjective and no cycle has exactly one edge of a color.

    A cycle with exactly one blue edge exists iff some blue edge has its
    endpoints joined by an all-red path, so two connectivity sweeps decide
    the predicate.
    """
    if not is_surjective(c):
        return False
    g = c.graph

    def reachable(color: str) -> dict[int, int]:
        parent = {v: v for v in g.vertices}

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e, col in c.colors.items():
            if col == color:
                ra, rb = find(e[0]), find(e[1])
                if ra != rb:
                    parent[ra] = rb
        return {v: find(v) for v in g.vertices}

    comp = {RED: reachable(RED), BLUE: reachable(BLUE)}
    other = {RED: BLUE, BLUE: RED}
    for e, col in c.colors.items():
        same = comp[other[col]]
        if same[e[0]] == same[e[1]]:
            return False
    return True


def enumerate_nap(g: Graph, modulo_swap: bool = True) -> ColoringSet:
    """All NAP-colorings by exhaustive scan of the 2^|E| colorings.

    With ``modulo_swap`` the representative with the smaller bitmask of each
    swap pair is kept.  Graphs beyond ``MAX_ENUM_EDGES`` edges are rejected
    rather than sampled.
    """
    m = len(g.edges)
    if m > MAX_ENUM_EDGES:
        raise BudgetExceededError(
            f"{m} edges exceeds the exhaustive enumeration budget of {MAX_ENUM_EDGES}"
        )
    vmasks = _vertex_edge_masks(g)
    full = (1 << m) - 1
    found = []
    for mask in range(1, max(full, 1)):
        if modulo_swap and mask > (mask ^ full):
            continue
        if _is_nap_mask(g, mask, vmasks):
            found.append(EdgeColoring(g, mask))
    return ColoringSet(tuple(found), modulo_swap)


def flexibility_certificate(g: Graph) -> Optional[EdgeColoring]:
    """Some NAP-coloring if one exists, else None.

    Existence is equivalent to the graph having an edge-length assignment
    that is flexible on the sphere.
    """
    m = len(g.edges)
    if m > MAX_ENUM_EDGES:
        raise BudgetExceededError(
            f"{m} edges exceeds the exhaustive enumeration budget of {MAX_ENUM_EDGES}"
        )
    vmasks = _vertex_edge_masks(g)
    for mask in range(1, (1 << m) - 1 if m else 0):
        if _is_nap_mask(g, mask, vmasks):
            return EdgeColoring(g, mask)
    return None


@dataclass(frozen=True)
class PolePartition:
    """Vertex split extracted from a NAP-coloring.

    ``poles`` holds the vertices meeting both colors (always an independent
    set); ``red_side`` and ``blue_side`` the remaining vertices, whose
    incident edges are all red respectively all blue.
    """

    poles: frozenset[int]
    red_side: frozenset[int]
    blue_side: frozenset[int]


def nap_pole_partition(c: EdgeColoring) -> PolePartition:
    if not is_nap(c):
        raise NotNapError("coloring is not a NAP-coloring")
    g = c.graph
    colors = c.colors
    poles, red_side, blue_side = set(), set(), set()
    for v in g.vertices:
        incident = {colors[normalized_edge(v, w)] for w in g.neighbors(v)}
        if incident == {RED, BLUE}:
            poles.add(v)
        elif incident == {RED}:
            red_side.add(v)
        else:
            blue_side.add(v)
    return PolePartition(frozenset(poles), frozenset(red_side), frozenset(blue_side))
