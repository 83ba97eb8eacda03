"""Bipartite graphs, difference graphs and cover families.

Rows are ``u_1..u_a`` and columns ``w_1..w_b``; an edge is a ``(row, col)``
pair of 1-based indices.  A difference graph is stored as its non-increasing
degree sequence ``f``: row ``i`` is adjacent to columns ``1..f[i]``.  That
sequence is a partition of the edge count, which is the whole point of the
correspondence with integer partitions.
"""

from __future__ import annotations

import itertools
import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import (
    ForeignEdge,
    HeightError,
    IdRangeError,
    NotPleError,
    ParamError,
    ParseError,
    PartitionError,
    ShapeError,
    UncoveredEdge,
)
from .poset import Poset
from .realizer import Ple, as_ple

MAX_PARTITION_ARG = 10_000

Edge = tuple[int, int]


@dataclass(frozen=True)
class BipartiteGraph:
    """Bipartite graph with row class of size ``a`` and column class of size ``b``."""

    a: int
    b: int
    edges: frozenset
    row_labels: tuple = field(default=(), compare=False)
    col_labels: tuple = field(default=(), compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "edges", frozenset(self.edges))
        if self.a < 0 or self.b < 0:
            raise ParamError("class sizes must be non-negative")
        for r, c in self.edges:
            if not (1 <= r <= self.a and 1 <= c <= self.b):
                raise IdRangeError(f"edge ({r}, {c}) outside {self.a}x{self.b}")

    @property
    def num_vertices(self) -> int:
        return self.a + self.b

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def row_neighbours(self, r: int) -> frozenset[int]:
        return frozenset(c for rr, c in self.edges if rr == r)

    def col_neighbours(self, c: int) -> frozenset[int]:
        return frozenset(r for r, cc in self.edges if cc == c)

    def transpose(self) -> "BipartiteGraph":
        return BipartiteGraph(self.b, self.a, frozenset((c, r) for r, c in self.edges),
                              self.col_labels, self.row_labels)

    def to_text(self) -> str:
        lines = [f"bigraph {self.a} {self.b}"] + [f"{r} {c}" for r, c in self.sorted_edges()]
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class DifferenceGraph:
    """H(a, b; f) with ``f`` non-increasing, every entry >= 1 and ``b = f[0]``."""

    f: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "f", tuple(self.f))
        _check_partition(self.f)

    @property
    def a(self) -> int:
        return len(self.f)

    @property
    def b(self) -> int:
        return self.f[0]

    @property
    def num_edges(self) -> int:
        return sum(self.f)

    def edges(self) -> frozenset[Edge]:
        return frozenset((i, j) for i, fi in enumerate(self.f, start=1) for j in range(1, fi + 1))

    def to_bipartite(self) -> BipartiteGraph:
        return BipartiteGraph(self.a, self.b, self.edges())


def _check_partition(p: Sequence[int]) -> None:
    if not p:
        raise PartitionError("a partition needs at least one part")
    if any(not isinstance(x, int) or x < 1 for x in p):
        raise PartitionError(f"{tuple(p)} has a non-positive part")
    if any(x < y for x, y in zip(p, p[1:])):
        raise PartitionError(f"{tuple(p)} is not non-increasing")


def from_partition(p: Sequence[int]) -> DifferenceGraph:
    return DifferenceGraph(tuple(p))


def to_partition(H: DifferenceGraph) -> tuple[int, ...]:
    return H.f


def transpose(H: DifferenceGraph) -> DifferenceGraph:
    """H(b, a; g) with ``g(j) = max{i : f(i) >= j}``."""
    return DifferenceGraph(tuple(max(i for i, fi in enumerate(H.f, start=1) if fi >= j)
                                 for j in range(1, H.b + 1)))


def count_partitions(m: int) -> int:
    """Exact number of partitions of ``m``."""
    if m < 0:
        raise ParamError("m must be non-negative")
    if m > MAX_PARTITION_ARG:
        raise ParamError(f"m > {MAX_PARTITION_ARG} not supported")
    ways = [1] + [0] * m
    for part in range(1, m + 1):
        for total in range(part, m + 1):
            ways[total] += ways[total - part]
    return ways[m]


def enumerate_difference_graphs(m: int) -> Iterator[DifferenceGraph]:
    """Every H(a, b; f) with ``m`` edges, found by scanning (a, b) and all
    non-increasing ``f: [a] -> [b]`` with ``f(1) = b``."""
    for b in range(1, m + 1):
        for a in range(1, m - b + 2):
            for tail in itertools.combinations_with_replacement(range(b, 0, -1), a - 1):
                f = (b,) + tail
                if sum(f) == m:
                    yield DifferenceGraph(f)


def is_nested(edges: Iterable[Edge]) -> bool:
    """True when the row neighbourhoods of ``edges`` form a chain under inclusion."""
    nbrs: dict[int, set[int]] = {}
    for r, c in edges:
        nbrs.setdefault(r, set()).add(c)
    sets = sorted(nbrs.values(), key=len, reverse=True)
    return all(small <= big for big, small in zip(sets, sets[1:]))


# -- embedded subgraphs and covers ---------------------------------------------

RECT = "rect"
DIFF = "diff"


@dataclass(frozen=True)
class Member:
    """A cover member embedded in a host graph.

    ``f is None`` marks a biclique ``rows x cols``.  Otherwise the member is a
    difference graph whose ``rows`` are listed in nesting order: row
    ``rows[i]`` is adjacent to ``cols[:f[i]]``.
    """

    rows: tuple[int, ...]
    cols: tuple[int, ...]
    f: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "rows", tuple(self.rows))
        object.__setattr__(self, "cols", tuple(self.cols))
        if self.f is not None:
            object.__setattr__(self, "f", tuple(self.f))

    @classmethod
    def rect(cls, rows: Iterable[int], cols: Iterable[int]) -> "Member":
        return cls(tuple(sorted(rows)), tuple(sorted(cols)))

    @classmethod
    def from_edges(cls, edges: Iterable[Edge]) -> "Member":
        """Nested-neighbourhood member spanning exactly the endpoints of ``edges``.

        Rows are ordered by decreasing degree, ties by id; columns likewise.
        The result is only a valid difference graph when the edges are nested.
        """
        edges = set(edges)
        row_deg = Counter(r for r, _ in edges)
        col_deg = Counter(c for _, c in edges)
        rows = tuple(sorted(row_deg, key=lambda r: (-row_deg[r], r)))
        cols = tuple(sorted(col_deg, key=lambda c: (-col_deg[c], c)))
        return cls(rows, cols, tuple(row_deg[r] for r in rows))

    @property
    def shape(self) -> str:
        return RECT if self.f is None else DIFF

    @property
    def num_vertices(self) -> int:
        return len(self.rows) + len(self.cols)

    def edges(self) -> frozenset[Edge]:
        if self.f is None:
            return frozenset(itertools.product(self.rows, self.cols))
        return frozenset((r, c) for r, fi in zip(self.rows, self.f) for c in self.cols[:fi])

    def is_biclique(self) -> bool:
        return self.f is None or all(fi == len(self.cols) for fi in self.f)

    def shape_problem(self) -> str | None:
        """Why the member is not a well-formed shape, or None."""
        if not self.rows or not self.cols:
            return "member has an empty side"
        if len(set(self.rows)) != len(self.rows) or len(set(self.cols)) != len(self.cols):
            return "member repeats a vertex"
        if self.f is None:
            return None
        if len(self.f) != len(self.rows):
            return "degree sequence length differs from row count"
        if self.f[0] != len(self.cols):
            return "first row must see every column"
        if any(x < 1 for x in self.f):
            return "isolated row"
        if any(x < y for x, y in zip(self.f, self.f[1:])):
            return "row neighbourhoods are not nested"
        return None


@dataclass(frozen=True)
class CoverFamily:
    host: BipartiteGraph
    members: tuple[Member, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "members", tuple(self.members))

    @property
    def multiplicity(self) -> dict[tuple[str, int], int]:
        mult: Counter = Counter()
        for m in self.members:
            mult.update(("u", r) for r in m.rows)
            mult.update(("w", c) for c in m.cols)
        return dict(sorted(mult.items()))

    @property
    def total_vertices(self) -> int:
        return sum(m.num_vertices for m in self.members)


@dataclass(frozen=True)
class CoverViolation:
    kind: str  # "shape" | "foreign-edge" | "uncovered-edge"
    edge: Edge | None = None
    member_index: int | None = None
    detail: str = ""

    def __str__(self) -> str:
        where = f" in member #{self.member_index}" if self.member_index is not None else ""
        edge = f" {self.edge}" if self.edge is not None else ""
        extra = f": {self.detail}" if self.detail else ""
        return f"{self.kind}{edge}{where}{extra}"


_COVER_ERRORS = {"shape": ShapeError, "foreign-edge": ForeignEdge, "uncovered-edge": UncoveredEdge}


@dataclass(frozen=True)
class CoverReport:
    ok: bool
    violation: CoverViolation | None = None
    multiplicity: dict = field(default_factory=dict)
    max_multiplicity: int = 0
    total_vertices: int = 0
    row_max: int = 0
    col_max: int = 0

    def __bool__(self) -> bool:
        return self.ok

    def raise_for_violation(self) -> "CoverReport":
        if not self.ok:
            raise _COVER_ERRORS[self.violation.kind](self.violation)
        return self


BICLIQUE = "biclique"
DIFFERENCE = "difference"


def verify_cover(
    G: BipartiteGraph, F: CoverFamily | Iterable[Member], kind: str = DIFFERENCE
) -> CoverReport:
    """Check that ``F`` covers exactly the edges of ``G`` with well-formed members.

    ``kind="biclique"`` additionally requires every member to be complete.
    Members are checked in order (shape, then foreign edges); uncovered host
    edges are reported in lexicographic order.
    """
    if kind not in (BICLIQUE, DIFFERENCE):
        raise ParamError(f"unknown cover kind {kind!r}")
    members = F.members if isinstance(F, CoverFamily) else tuple(F)
    covered: set[Edge] = set()
    for idx, m in enumerate(members):
        if any(not 1 <= r <= G.a for r in m.rows) or any(not 1 <= c <= G.b for c in m.cols):
            raise IdRangeError(f"member #{idx} uses a vertex outside {G.a}x{G.b}")
        problem = m.shape_problem()
        if problem is None and kind == BICLIQUE and not m.is_biclique():
            problem = "member is not complete bipartite"
        if problem is not None:
            return CoverReport(False, CoverViolation("shape", None, idx, problem))
        edges = m.edges()
        foreign = sorted(edges - G.edges)
        if foreign:
            return CoverReport(False, CoverViolation("foreign-edge", foreign[0], idx))
        covered |= edges
    missing = sorted(G.edges - covered)
    if missing:
        return CoverReport(False, CoverViolation("uncovered-edge", missing[0]))
    family = CoverFamily(G, members)
    mult = family.multiplicity
    row_max = max((v for (side, _), v in mult.items() if side == "u"), default=0)
    col_max = max((v for (side, _), v in mult.items() if side == "w"), default=0)
    return CoverReport(True, None, mult, max(row_max, col_max), family.total_vertices, row_max, col_max)


# -- height-two posets <-> bipartite graphs --------------------------------------


def height2_classes(P: Poset) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(A, B): minimal elements (isolated ones included) and the remaining maximal ones."""
    if P.height() > 2:
        raise HeightError(f"poset has height {P.height()} > 2")
    A = P.minimal()
    B = tuple(x for x in P.elements if P.below(x))
    return A, B


def critical_pair_graph(P: Poset) -> BipartiteGraph:
    """Rows are A, columns are B (both in id order); ``ab`` is an edge iff a || b."""
    A, B = height2_classes(P)
    edges = {
        (i, j)
        for i, x in enumerate(A, start=1)
        for j, y in enumerate(B, start=1)
        if P.incomparable(x, y)
    }
    return BipartiteGraph(len(A), len(B), frozenset(edges), A, B)


def poset_from_bipartite(G: BipartiteGraph) -> Poset:
    """Row ``i`` becomes element ``i``, column ``j`` element ``a + j``; a < b iff ab is a non-edge."""
    rel = [
        (r, G.a + c)
        for r in range(1, G.a + 1)
        for c in range(1, G.b + 1)
        if (r, c) not in G.edges
    ]
    return Poset(G.a + G.b, frozenset(rel))


def ple_to_difference_graph(P: Poset, L: Ple | Sequence[int]) -> Member | None:
    """Difference graph H(L) of a ple of a height-two poset, embedded in G(P).

    The leading block of minimal elements and the trailing block of maximal
    ones are trimmed first (they reverse nothing).  Returns None when no
    critical pair is reversed.
    """
    L = as_ple(L)
    bad = L.first_violation(P)
    if bad is not None:
        raise NotPleError(f"{bad[0]} listed before {bad[1]} although {bad[1]} < {bad[0]}")
    G = critical_pair_graph(P)
    row_of = {x: i for i, x in enumerate(G.row_labels, start=1)}
    col_of = {y: j for j, y in enumerate(G.col_labels, start=1)}
    order = list(L.order)
    while order and order[0] in row_of:
        order.pop(0)
    while order and order[-1] in col_of:
        order.pop()
    edges = set()
    seen_cols: list[int] = []
    for x in order:
        if x in col_of:
            seen_cols.append(col_of[x])
        else:
            edges.update((row_of[x], c) for c in seen_cols)
    if not edges:
        return None
    return Member.from_edges(edges)


# -- random graphs --------------------------------------------------------------


def random_bipartite(n1: int, n2: int, p: float, seed: int) -> BipartiteGraph:
    """Sample G(n1, n2, p): one uniform draw per pair in row-major order, edge iff draw < p."""
    if n1 < 0 or n2 < 0 or not 0.0 <= p <= 1.0:
        raise ParamError("need n1, n2 >= 0 and 0 <= p <= 1")
    rng = random.Random(seed & 0xFFFFFFFFFFFFFFFF)
    edges = [(r, c) for r in range(1, n1 + 1) for c in range(1, n2 + 1) if rng.random() < p]
    return BipartiteGraph(n1, n2, frozenset(edges))


# -- text formats ---------------------------------------------------------------


def parse_bigraph(text: str) -> BipartiteGraph:
    header = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            if header is None:
                if len(parts) != 3 or parts[0] != "bigraph":
                    raise ParseError(f"line {lineno}: expected 'bigraph <a> <b>'")
                header = (int(parts[1]), int(parts[2]))
                continue
            if len(parts) != 2:
                raise ParseError(f"line {lineno}: expected '<u> <w>'")
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer token") from None
    if header is None:
        raise ParseError("missing 'bigraph <a> <b>' header")
    try:
        return BipartiteGraph(header[0], header[1], frozenset(edges))
    except (IdRangeError, ParamError) as exc:
        raise ParseError(str(exc)) from None


def _ints(field_text: str, lineno: int) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in field_text.replace(" ", "").split(",") if t)
    except ValueError:
        raise ParseError(f"line {lineno}: bad integer list {field_text!r}") from None


def parse_cover(text: str) -> list[Member]:
    """Read ``rect: u,.. | w,..`` and ``diff: u,.. | w,.. | f,..`` lines."""
    members = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, sep, rest = line.partition(":")
        fields = [s.strip() for s in rest.split("|")]
        head = head.strip()
        if not sep or head not in (RECT, DIFF):
            raise ParseError(f"line {lineno}: expected 'rect:' or 'diff:'")
        if head == RECT and len(fields) == 2:
            members.append(Member(_ints(fields[0], lineno), _ints(fields[1], lineno)))
        elif head == DIFF and len(fields) == 3:
            members.append(Member(_ints(fields[0], lineno), _ints(fields[1], lineno), _ints(fields[2], lineno)))
        else:
            raise ParseError(f"line {lineno}: wrong number of '|' separated fields")
    return members


def format_cover(members: Iterable[Member]) -> str:
    out = []
    for m in members:
        rows = ",".join(map(str, m.rows))
        cols = ",".join(map(str, m.cols))
        if m.f is None:
            out.append(f"rect: {rows} | {cols}")
        else:
            out.append(f"diff: {rows} | {cols} | {','.join(map(str, m.f))}")
    return "".join(line + "\n" for line in out)


def staircase(n: int) -> DifferenceGraph:
    """H_n = H(n, n; f) with f(i) = n + 1 - i."""
    if n < 1:
        raise ParamError("staircase needs n >= 1")
    return DifferenceGraph(tuple(range(n, 0, -1)))


def edge_multiplicities(members: Sequence[Member]) -> Counter:
    return Counter(e for m in members for e in m.edges())
