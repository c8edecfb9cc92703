"""Cut combinatorics for flexibility analysis of K(3,3).

Every vertex ``v`` of a graph contributes two marked labels ``P_v`` and
``Q_v``.  A *cut* is a bipartition of the marked labels with both sides of
size at least two.  A cut is *bond-valid* when no edge meets a side in
exactly two of its four labels; bond-valid cuts induce a total red/blue
edge coloring (red where at least three labels sit on the I side).

For K(3,3), every cut inducing a surjective coloring can be written in the
normal form ``(i, T1 T2 T3)``: the I side holds both labels of an apex
vertex ``i`` plus one label (P or Q, given by the pattern letters) of each
of the three opposite-parity vertices in increasing order.  Swapping all
P's and Q's gives the conjugate cut; intersection multiplicities are equal
on conjugate pairs, so the 48 normal cuts collapse to 24 unknowns.

The module also ships the intersection-multiplicity table for the five
quadrilateral motion types, the degree-table and type-table machinery with
its group action, and a bounded integer-feasibility solver for the linear
systems obtained by pulling divisor cuts back along forgetful projections.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple, Optional, Sequence

from .coloring import BLUE, RED, EdgeColoring, is_nap
from .errors import (
    BudgetExceededError,
    InconsistentTypesError,
    InvalidCutError,
    UnknownRowError,
)
from .graphs import Graph, k33, nonedges

Label = tuple[str, int]  # ("P" | "Q", vertex)

ODD_VERTICES = (1, 3, 5)
EVEN_VERTICES = (2, 4, 6)

_SWAP = {"P": "Q", "Q": "P"}


def marked_labels(g: Graph) -> tuple[Label, ...]:
    return tuple((kind, v) for v in g.vertices for kind in ("P", "Q"))


def conjugate_side(side: frozenset[Label]) -> frozenset[Label]:
    return frozenset((_SWAP[k], v) for k, v in side)


@dataclass(frozen=True)
class Cut:
    """Bipartition (I, J) of the marked labels; sides at least two labels."""

    I: frozenset[Label]
    J: frozenset[Label]

    def __post_init__(self):
        if self.I & self.J:
            raise InvalidCutError("cut sides overlap")
        if len(self.I) < 2 or len(self.J) < 2:
            raise InvalidCutError("each cut side needs at least two labels")

    def swapped(self) -> "Cut":
        return Cut(self.J, self.I)

    def conjugate(self) -> "Cut":
        return Cut(conjugate_side(self.I), conjugate_side(self.J))

    def unordered(self) -> frozenset[frozenset[Label]]:
        return frozenset((self.I, self.J))

    def restrict(self, vertices: Iterable[int]) -> frozenset[frozenset[Label]]:
        keep = set(vertices)
        return frozenset(
            (
                frozenset(l for l in self.I if l[1] in keep),
                frozenset(l for l in self.J if l[1] in keep),
            )
        )


def cut_for(g: Graph, i_side: Iterable[Label]) -> Cut:
    """Cut of g's marked labels with the given I side."""
    I = frozenset(i_side)
    J = frozenset(marked_labels(g)) - I
    return Cut(I, J)


def cut_valid_for_bond(g: Graph, c: Cut) -> bool:
    """No edge may meet a cut side in exactly two of its four labels."""
    labels = set(marked_labels(g))
    if c.I | c.J != labels:
        raise InvalidCutError("cut does not partition this graph's marked labels")
    for a, b in g.edges:
        quad = {("P", a), ("Q", a), ("P", b), ("Q", b)}
        if len(quad & c.I) == 2:
            return False
    return True


def coloring_from_cut(g: Graph, c: Cut) -> EdgeColoring:
    """Edge coloring induced by a bond-valid cut.

    An edge is red when at least three of its four labels lie in I; bond
    validity guarantees every edge receives a color.
    """
    if not cut_valid_for_bond(g, c):
        raise InvalidCutError("cut is not bond-valid for this graph")
    colors = {}
    for e in g.edges:
        a, b = e
        quad = {("P", a), ("Q", a), ("P", b), ("Q", b)}
        colors[e] = RED if len(quad & c.I) >= 3 else BLUE
    return EdgeColoring.from_colors(g, colors)


def nap_iff_separated_nonedge(g: Graph, c: Cut) -> tuple[bool, Optional[tuple[int, int]]]:
    """NAP verdict of the induced coloring plus a separated non-edge witness.

    The coloring is NAP exactly when some non-edge {c, d} has both labels
    of c in I and both labels of d in J (or vice versa).
    """
    verdict = is_nap(coloring_from_cut(g, c))
    witness = None
    for a, b in sorted(nonedges(g)):
        a_in_i = {("P", a), ("Q", a)} <= c.I
        a_in_j = {("P", a), ("Q", a)} <= c.J
        b_in_i = {("P", b), ("Q", b)} <= c.I
        b_in_j = {("P", b), ("Q", b)} <= c.J
        if (a_in_i and b_in_j) or (a_in_j and b_in_i):
            witness = (a, b)
            break
    return verdict, witness


def enumerate_valid_cuts(g: Graph, modulo_symmetry: bool = True) -> list[Cut]:
    """All bond-valid cuts inducing surjective colorings.

    Cuts are unordered partitions; with ``modulo_symmetry`` the global
    P/Q swap is also quotiented out.  The scan is exhaustive over the
    2^(2|V|) bipartitions, so graphs beyond 8 vertices are rejected.
    """
    if g.num_vertices > 8:
        raise BudgetExceededError("cut enumeration is exhaustive; at most 8 vertices")
    labels = marked_labels(g)
    n = len(labels)
    seen: set[frozenset[frozenset[Label]]] = set()
    out: list[Cut] = []
    for mask in range(1, (1 << n) - 1):
        bits = mask.bit_count()
        if bits < 2 or n - bits < 2:
            continue
        I = frozenset(labels[i] for i in range(n) if mask >> i & 1)
        cut = cut_for(g, I)
        key = cut.unordered()
        if key in seen:
            continue
        seen.add(key)
        if modulo_symmetry:
            seen.add(cut.conjugate().unordered())
        if not cut_valid_for_bond(g, cut):
            continue
        col = coloring_from_cut(g, cut)
        if not (0 < col.mask < (1 << g.num_edges) - 1):
            continue
        out.append(cut)
    return out


# ---------------------------------------------------------------------------
# normal-form cuts of K(3,3) and conjugation-merged unknowns
# ---------------------------------------------------------------------------


def _opposite_parity(i: int) -> tuple[int, ...]:
    return EVEN_VERTICES if i % 2 == 1 else ODD_VERTICES


@dataclass(frozen=True, order=True)
class NormalCut:
    """Cut ``(i, T1 T2 T3)`` of K(3,3) in normal form.

    The I side is ``{P_i, Q_i}`` plus the pattern letter of each vertex of
    the opposite parity, taken in increasing vertex order.
    """

    apex: int
    pattern: str

    def __post_init__(self):
        if self.apex not in range(1, 7):
            raise InvalidCutError(f"apex {self.apex} outside 1..6")
        if len(self.pattern) != 3 or set(self.pattern) - {"P", "Q"}:
            raise InvalidCutError(f"bad pattern {self.pattern!r}")

    def i_side(self) -> frozenset[Label]:
        side = {("P", self.apex), ("Q", self.apex)}
        for letter, v in zip(self.pattern, _opposite_parity(self.apex)):
            side.add((letter, v))
        return frozenset(side)

    def to_cut(self, g: Graph) -> Cut:
        return cut_for(g, self.i_side())

    def conjugate(self) -> "NormalCut":
        return NormalCut(self.apex, "".join(_SWAP[c] for c in self.pattern))

    def canonical(self) -> "NormalCut":
        """Representative of the conjugate pair (lexicographically smaller)."""
        return min(self, self.conjugate())


def all_normal_cuts() -> tuple[NormalCut, ...]:
    return tuple(
        NormalCut(i, "".join(p))
        for i in range(1, 7)
        for p in itertools.product("PQ", repeat=3)
    )


def normalize_cut(g: Graph, c: Cut) -> NormalCut:
    """Normal form of a surjective-coloring valid cut of K(3,3)."""
    for nc in all_normal_cuts():
        if nc.to_cut(g).unordered() == c.unordered():
            return nc
    raise InvalidCutError("cut has no normal form; is its coloring surjective?")


# ---------------------------------------------------------------------------
# quadrilateral cuts and the intersection-multiplicity table
# ---------------------------------------------------------------------------

QUAD_CUT_KINDS = ("om", "ou", "em", "eu")

# I/J sides of the four named cuts for the standard quadrilateral with
# cycle roles 1-2-3-4 (odd roles 1, 3; even roles 2, 4).  "o"/"e" says
# which parity is separated, "m"/"u" whether the remaining labels mix.
_QUAD_CUTS = {
    "ou": ({("P", 1), ("Q", 1), ("P", 2), ("P", 4)}, {("P", 3), ("Q", 3), ("Q", 2), ("Q", 4)}),
    "eu": ({("P", 2), ("Q", 2), ("P", 1), ("P", 3)}, {("P", 4), ("Q", 4), ("Q", 1), ("Q", 3)}),
    "om": ({("P", 1), ("Q", 1), ("P", 2), ("Q", 4)}, {("P", 3), ("Q", 3), ("Q", 2), ("P", 4)}),
    "em": ({("P", 2), ("Q", 2), ("P", 1), ("Q", 3)}, {("P", 4), ("Q", 4), ("Q", 1), ("P", 3)}),
}


def quad_cycle(forgot_odd: int, forgot_even: int) -> tuple[int, int, int, int]:
    """Cycle roles (o1, e1, o2, e2) of the quadrilateral left after
    forgetting one odd and one even vertex of K(3,3)."""
    odds = sorted(set(ODD_VERTICES) - {forgot_odd})
    evens = sorted(set(EVEN_VERTICES) - {forgot_even})
    return (odds[0], evens[0], odds[1], evens[1])


def quad_cut_partition(cycle: Sequence[int], kind: str) -> frozenset[frozenset[Label]]:
    """The named cut of a quadrilateral, with roles mapped onto ``cycle``."""
    if kind not in _QUAD_CUTS:
        raise UnknownRowError(f"unknown quadrilateral cut {kind!r}")
    role = {1: cycle[0], 2: cycle[1], 3: cycle[2], 4: cycle[3]}
    I, J = _QUAD_CUTS[kind]
    return frozenset(
        (
            frozenset((k, role[v]) for k, v in I),
            frozenset((k, role[v]) for k, v in J),
        )
    )


@lru_cache(maxsize=None)
def cut_extensions(forgot_odd: int, forgot_even: int, kind: str) -> tuple[NormalCut, ...]:
    """Normal cuts of K(3,3) restricting to the given quadrilateral cut.

    These are the boundary divisors appearing in the pullback of the
    quadrilateral divisor along the projection that forgets the two
    vertices; there are always four.
    """
    cycle = quad_cycle(forgot_odd, forgot_even)
    target = quad_cut_partition(cycle, kind)
    quad_vertices = set(cycle)
    g = k33()
    hits = []
    for nc in all_normal_cuts():
        if nc.to_cut(g).restrict(quad_vertices) == target:
            hits.append(nc)
    return tuple(hits)


class MuRow(NamedTuple):
    """Intersection multiplicities (om, ou, em, eu) of a motion type."""

    om: int
    ou: int
    em: int
    eu: int


# rows keyed by (quadrilateral type tag, subcase); deltoid subcases name the
# degenerate companion component, rhomboid/lozenge subcases the motion
# component (1..4)
MU_TABLE: dict[tuple[str, object], MuRow] = {
    ("g", None): MuRow(1, 1, 1, 1),
    ("o", "coincide"): MuRow(1, 1, 1, 0),
    ("o", "antipodal"): MuRow(1, 1, 0, 1),
    ("e", "coincide"): MuRow(1, 0, 1, 1),
    ("e", "antipodal"): MuRow(0, 1, 1, 1),
    ("r", 1): MuRow(1, 0, 1, 0),
    ("r", 2): MuRow(0, 1, 1, 0),
    ("r", 3): MuRow(1, 0, 0, 1),
    ("r", 4): MuRow(0, 1, 0, 1),
    ("l", 1): MuRow(1, 0, 1, 0),
    ("l", 2): MuRow(0, 1, 1, 0),
    ("l", 3): MuRow(1, 0, 0, 1),
    ("l", 4): MuRow(0, 1, 0, 1),
}


def mu_lookup(case: str, subcase: object = None) -> MuRow:
    try:
        return MU_TABLE[(case, subcase)]
    except KeyError:
        raise UnknownRowError(f"no multiplicity row for {(case, subcase)!r}") from None


# ---------------------------------------------------------------------------
# degree tables and type tables
# ---------------------------------------------------------------------------


def theta(d1: int, d2: int, d3: int) -> int:
    """Combined degree of a triple of 1-or-2 projection degrees."""
    ds = (d1, d2, d3)
    if any(d not in (1, 2) for d in ds):
        raise UnknownRowError(f"degrees must be 1 or 2, got {ds}")
    if ds == (1, 1, 1):
        return 1
    if ds == (2, 2, 2):
        return 4
    return 2


Grid = tuple[tuple, tuple, tuple]


@dataclass(frozen=True)
class DegreeTable:
    """3x3 grid of projection degrees, rows odd vertices and columns even."""

    grid: Grid

    def __post_init__(self):
        if len(self.grid) != 3 or any(len(r) != 3 for r in self.grid):
            raise UnknownRowError("degree table must be 3x3")
        if any(d not in (1, 2) for r in self.grid for d in r):
            raise UnknownRowError("degree table entries must be 1 or 2")

    def entry(self, odd: int, even: int) -> int:
        return self.grid[ODD_VERTICES.index(odd)][EVEN_VERTICES.index(even)]

    def row_margin(self, r: int) -> int:
        return theta(*self.grid[r])

    def col_margin(self, c: int) -> int:
        return theta(*(self.grid[r][c] for r in range(3)))

    def margins(self) -> tuple[tuple[int, int, int], tuple[int, int, int]]:
        return (
            tuple(self.row_margin(r) for r in range(3)),
            tuple(self.col_margin(c) for c in range(3)),
        )


@dataclass(frozen=True)
class TypeTable:
    """3x3 grid of quadrilateral type tags; 'r/l' marks the unresolved pair."""

    grid: Grid

    def entry(self, odd: int, even: int) -> str:
        return self.grid[ODD_VERTICES.index(odd)][EVEN_VERTICES.index(even)]

    def rows(self) -> tuple[tuple[str, str, str], ...]:
        return self.grid

    def cols(self) -> tuple[tuple[str, str, str], ...]:
        return tuple(tuple(self.grid[r][c] for r in range(3)) for c in range(3))


_TYPE_RULES = {
    (2, 4, 4): "g",
    (1, 2, 2): "g",
    (2, 2, 4): "e",
    (2, 4, 2): "o",
    (1, 1, 2): "e",
    (1, 2, 1): "o",
    (2, 2, 2): "r/l",
    (1, 1, 1): "r/l",
}


def type_table(dt: DegreeTable) -> TypeTable:
    """Quadrilateral types determined by an entry and its two margins.

    The rhomboid/lozenge ambiguity is preserved as 'r/l'.
    """
    rm, cm = dt.margins()
    grid = []
    for r in range(3):
        row = []
        for c in range(3):
            key = (dt.grid[r][c], rm[r], cm[c])
            try:
                row.append(_TYPE_RULES[key])
            except KeyError:
                raise UnknownRowError(f"no type rule for {key}") from None
        grid.append(tuple(row))
    return TypeTable(tuple(grid))


def _permutation_closure(patterns: Iterable[str]) -> frozenset[tuple[str, str, str]]:
    out = set()
    for pat in patterns:
        for p in itertools.permutations(pat):
            out.add(tuple(p))
    return frozenset(out)


ALLOWED_ROWS = _permutation_closure(
    ["rre", "ooo", "ool", "oog"] + ["gg" + s for s in "goerl"]
)
ALLOWED_COLS = _permutation_closure(
    ["rro", "eee", "eel", "eeg"] + ["gg" + s for s in "goerl"]
)


def _resolutions(tt: TypeTable) -> list[TypeTable]:
    cells = [(r, c) for r in range(3) for c in range(3) if tt.grid[r][c] == "r/l"]
    out = []
    for combo in itertools.product("rl", repeat=len(cells)):
        grid = [list(row) for row in tt.grid]
        for (r, c), ch in zip(cells, combo):
            grid[r][c] = ch
        out.append(TypeTable(tuple(tuple(row) for row in grid)))
    return out


def row_col_allowed(tt: TypeTable) -> bool:
    """True iff some resolution of 'r/l' entries has all rows and columns on
    the allowed lists (each checked up to permutation)."""
    for cand in _resolutions(tt):
        rows_ok = all(row in ALLOWED_ROWS for row in cand.rows())
        cols_ok = all(col in ALLOWED_COLS for col in cand.cols())
        if rows_ok and cols_ok:
            return True
    return False


def allowed_resolutions(tt: TypeTable) -> list[TypeTable]:
    return [
        cand
        for cand in _resolutions(tt)
        if all(row in ALLOWED_ROWS for row in cand.rows())
        and all(col in ALLOWED_COLS for col in cand.cols())
    ]


# group action: permute rows, permute columns, optionally transpose


def _act(grid: Grid, rp: Sequence[int], cp: Sequence[int], flip: bool) -> Grid:
    g = grid
    if flip:
        g = tuple(tuple(g[r][c] for r in range(3)) for c in range(3))
    return tuple(tuple(g[rp[r]][cp[c]] for c in range(3)) for r in range(3))


_PERMS = tuple(itertools.permutations(range(3)))
GROUP = tuple((rp, cp, f) for rp in _PERMS for cp in _PERMS for f in (False, True))


def orbit(grid: Grid) -> frozenset[Grid]:
    return frozenset(_act(grid, *g) for g in GROUP)


def tables_equivalent(a: DegreeTable, b: DegreeTable) -> bool:
    return b.grid in orbit(a.grid)


_PARITY_SWAP = {"o": "e", "e": "o"}


def act_on_types(grid: Grid, rp: Sequence[int], cp: Sequence[int], flip: bool) -> Grid:
    """Group action on type tables; a transpose exchanges the deltoid letters."""
    out = _act(grid, rp, cp, flip)
    if flip:
        out = tuple(tuple(_PARITY_SWAP.get(x, x) for x in row) for row in out)
    return out


def align_type_table(
    dt: DegreeTable, tt: TypeTable, target: DegreeTable
) -> Optional[TypeTable]:
    """Type table transported along a group element taking dt onto target."""
    for rp, cp, f in GROUP:
        if _act(dt.grid, rp, cp, f) == target.grid:
            return TypeTable(act_on_types(tt.grid, rp, cp, f))
    return None


def all_degree_tables() -> Iterable[DegreeTable]:
    for bits in itertools.product((1, 2), repeat=9):
        yield DegreeTable(tuple(tuple(bits[3 * r + c] for c in range(3)) for r in range(3)))


def count_degree_table_orbits() -> int:
    """Orbits of the row/column/transpose group on the 512 degree tables."""
    seen: set[Grid] = set()
    count = 0
    for dt in all_degree_tables():
        if dt.grid in seen:
            continue
        seen |= orbit(dt.grid)
        count += 1
    return count


def count_degree_table_orbits_burnside() -> float:
    """Same count via averaging fixed points over the 72 group elements."""
    total = 0
    tables = [dt.grid for dt in all_degree_tables()]
    for gel in GROUP:
        total += sum(1 for t in tables if _act(t, *gel) == t)
    return total / len(GROUP)


def count_k33_subgraph_classes() -> int:
    """Spanning subgraphs of K(3,3) up to graph automorphism.

    Encodes a subgraph by which of the nine edges are present; the
    automorphism group acts exactly like the degree-table group (entry 2
    marking a present edge), so this is an independent route to the same
    orbit count.
    """
    seen: set[Grid] = set()
    count = 0
    for bits in itertools.product((0, 1), repeat=9):
        grid = tuple(tuple(bits[3 * r + c] for c in range(3)) for r in range(3))
        if grid in seen:
            continue
        seen |= frozenset(_act(grid, *g) for g in GROUP)
        count += 1
    return count


@dataclass(frozen=True)
class AdmissibleCase:
    """One surviving degree-table orbit with its (partially resolved) types.

    ``type_table`` keeps 'r/l' wherever both letters occur among the fully
    allowed resolutions; ``resolutions`` lists those resolutions.
    """

    degree_table: DegreeTable
    type_table: TypeTable
    resolutions: tuple[TypeTable, ...]


def admissible_cases() -> list[AdmissibleCase]:
    """Degree-table orbits whose type table passes the row/column filter.

    Exactly four orbits survive.  Representatives are chosen to match the
    standard display: sorted by the number of degree-2 entries.
    """
    reps: list[DegreeTable] = []
    seen: set[Grid] = set()
    for dt in all_degree_tables():
        if dt.grid in seen:
            continue
        seen |= orbit(dt.grid)
        if row_col_allowed(type_table(dt)):
            reps.append(dt)

    cases = []
    for dt in reps:
        tt = type_table(dt)
        res = tuple(allowed_resolutions(tt))
        grid = []
        for r in range(3):
            row = []
            for c in range(3):
                letters = {cand.grid[r][c] for cand in res}
                row.append("r/l" if letters == {"r", "l"} else letters.pop())
            grid.append(tuple(row))
        cases.append(AdmissibleCase(dt, TypeTable(tuple(grid)), res))
    cases.sort(key=lambda c: sum(d == 2 for row in c.degree_table.grid for d in row))
    return cases


def count_admissible_tables_raw() -> int:
    """Admissible degree tables before quotienting by the group action."""
    return sum(1 for dt in all_degree_tables() if row_col_allowed(type_table(dt)))


# ---------------------------------------------------------------------------
# pullback systems and bounded integer feasibility
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Equation:
    """Sum of conjugation-merged unknowns equals a fixed right-hand side."""

    terms: tuple[NormalCut, ...]
    rhs: int
    label: str


_TAG_OF_ENTRY = {"g": "g", "o": "o", "e": "e", "r": "r", "l": "l"}


def build_pullback_system(
    dt: DegreeTable,
    tt: TypeTable,
    subcases: dict[tuple[int, int], object],
    divisors: Sequence[str] = ("om", "ou"),
) -> list[Equation]:
    """Equations for the 24 merged cut unknowns of a candidate motion.

    For each quadrilateral (indexed by the forgotten odd/even pair) and each
    requested divisor kind, the four extension cuts sum to the divisor's
    multiplicity row value times the projection degree.  ``subcases`` must
    name the table row for every quadrilateral whose type has several rows
    (deltoids and rhomboids/lozenges); quadrilaterals typed 'g' need none.
    """
    eqs = []
    for k in ODD_VERTICES:
        for l in EVEN_VERTICES:
            tag = tt.entry(k, l)
            if tag == "r/l":
                raise InconsistentTypesError(
                    f"type of quadrilateral without {{{k},{l}}} is unresolved"
                )
            sub = subcases.get((k, l))
            if tag == "g" and sub is None:
                row = mu_lookup("g", None)
            else:
                row = mu_lookup(_TAG_OF_ENTRY[tag], sub)
            deg = dt.entry(k, l)
            for kind in divisors:
                rhs = getattr(row, kind) * deg
                terms = tuple(
                    sorted(nc.canonical() for nc in cut_extensions(k, l, kind))
                )
                eqs.append(Equation(terms, rhs, f"quad-without-{k}{l}-{kind}"))
    return eqs


def mu_solutions(
    equations: Sequence[Equation], max_solutions: int = 2
) -> list[dict[NormalCut, int]]:
    """Nonnegative integer solutions, at most ``max_solutions`` of them.

    Each unknown is bounded by the smallest right-hand side it appears in,
    so plain backtracking with sum pruning is exhaustive.
    """
    unknowns = sorted({u for eq in equations for u in eq.terms})
    bound = {
        u: min(eq.rhs for eq in equations if u in eq.terms) for u in unknowns
    }
    eq_data = [(eq.terms, eq.rhs) for eq in equations]
    solutions: list[dict[NormalCut, int]] = []

    def feasible_partial(assign: dict[NormalCut, int]) -> bool:
        for terms, rhs in eq_data:
            lo = hi = 0
            for t in terms:
                if t in assign:
                    lo += assign[t]
                    hi += assign[t]
                else:
                    hi += bound[t]
            if lo > rhs or hi < rhs:
                return False
        return True

    def backtrack(idx: int, assign: dict[NormalCut, int]):
        if len(solutions) >= max_solutions:
            return
        if idx == len(unknowns):
            solutions.append(dict(assign))
            return
        u = unknowns[idx]
        for val in range(bound[u] + 1):
            assign[u] = val
            if feasible_partial(assign):
                backtrack(idx + 1, assign)
            del assign[u]
            if len(solutions) >= max_solutions:
                return

    backtrack(0, {})
    return solutions


def mu_system_feasible(equations: Sequence[Equation]) -> Optional[dict[NormalCut, int]]:
    """A nonnegative integer solution, or None when provably infeasible."""
    sols = mu_solutions(equations, max_solutions=1)
    return sols[0] if sols else None
