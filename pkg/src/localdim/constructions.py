"""Constructive bounds on local dimension, each emitting a checkable witness.

Realizer-producing functions return objects that
:func:`localdim.realizer.verify_local_realizer` accepts; cover-producing
ones return members that :func:`localdim.diffgraph.verify_cover` accepts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .diffgraph import (
    BICLIQUE,
    BipartiteGraph,
    CoverFamily,
    CoverReport,
    DifferenceGraph,
    Member,
    critical_pair_graph,
    height2_classes,
    staircase,
    verify_cover,
)
from .errors import (
    BudgetExceeded,
    ChainError,
    CycleError,
    HeightError,
    InternalCycle,
    NotPleError,
    ParamError,
    PreconditionError,
    SizeError,
)
from .poset import ElementMap, Poset, bits, build_poset, chain, product, split
from .realizer import LocalRealizer, Ple, verify_local_realizer
from .solvers import DEFAULT_LDIM_ELEMENTS, SolveBudget, exact_ldim

# -- block/trace biclique partition ----------------------------------------------


def default_block_size(a: int) -> int:
    """floor(log2 a - 2 log2 log2 a), clamped to at least 1."""
    if a < 2:
        return 1
    return max(1, math.floor(math.log2(a) - 2 * math.log2(math.log2(max(a, 4)))))


def block_trace_cover(G: BipartiteGraph, b: int | None = None) -> CoverFamily:
    """Partition ``E(G)`` into bicliques, block by block over the rows.

    Rows are cut into consecutive blocks of at most ``b`` rows.  Inside a
    block, columns with the same nonempty neighbourhood trace form one
    biclique (trace x columns).  A column lands in at most one member per
    block, a row in at most ``2**(b-1)`` members.
    """
    if b is None:
        b = default_block_size(G.a)
    if b < 1:
        raise ParamError("block size must be at least 1")
    col_nbrs = {c: G.col_neighbours(c) for c in range(1, G.b + 1)}
    members = []
    for start in range(1, G.a + 1, b):
        block = frozenset(range(start, min(start + b, G.a + 1)))
        groups: dict[tuple[int, ...], list[int]] = {}
        for c in range(1, G.b + 1):
            trace = tuple(sorted(col_nbrs[c] & block))
            if trace:
                groups.setdefault(trace, []).append(c)
        for trace in sorted(groups):
            members.append(Member(trace, tuple(groups[trace])))
    return CoverFamily(G, tuple(members))


# -- height-two posets -------------------------------------------------------------


@dataclass(frozen=True)
class Height2Certificate:
    realizer: LocalRealizer
    graph: BipartiteGraph
    cover: CoverFamily
    cover_report: CoverReport
    block_size: int


def height2_certificate(P: Poset, block_size: int | None = None) -> Height2Certificate:
    """Two opposite A<B extensions plus one ple B_i < A_i per biclique of a
    block-trace partition of the critical-pair graph."""
    if P.height() > 2:
        raise HeightError(f"poset has height {P.height()} > 2")
    A, B = height2_classes(P)
    G = critical_pair_graph(P)
    b = default_block_size(G.a) if block_size is None else block_size
    cover = block_trace_cover(G, b)
    report = verify_cover(G, cover, BICLIQUE).raise_for_violation()
    L1 = A + B
    L2 = tuple(reversed(A)) + tuple(reversed(B))
    ples = [Ple(L1)] if L1 == L2 else [Ple(L1), Ple(L2)]
    for m in cover.members:
        ples.append(Ple(tuple(B[c - 1] for c in m.cols) + tuple(A[r - 1] for r in m.rows)))
    return Height2Certificate(LocalRealizer(tuple(ples)), G, cover, report, b)


def height2_local_realizer(P: Poset, block_size: int | None = None) -> LocalRealizer:
    return height2_certificate(P, block_size).realizer


@dataclass(frozen=True)
class SplitBound:
    split: Poset
    split_map: ElementMap
    realizer: LocalRealizer
    mu_split: int
    upper: int  # ldim(P) <= 2 * mu_split - 1
    ldim_split: int | None = None
    lower: int | None = None  # ldim(P) >= ldim(split) - 2, when ldim(split) is known


def ldim_bound_via_split(P: Poset, exact_budget: SolveBudget | None = None) -> SplitBound:
    """Bound ldim(P) through a verified local realizer of its split.

    ``ldim(P) <= 2 ldim(Q) - 1 <= 2 mu(Q) - 1``.  When ``exact_budget``
    admits the split, ldim(Q) is solved exactly and ``ldim(P) >= ldim(Q) - 2``
    is reported as well.
    """
    Q, qmap = split(P)
    R = height2_local_realizer(Q)
    mu = verify_local_realizer(Q, R).raise_for_violation().mu
    exact = lower = None
    if exact_budget is not None:
        try:
            exact = exact_ldim(Q, exact_budget).value
            lower = max(1, exact - 2)
        except BudgetExceeded:
            pass
    return SplitBound(Q, qmap, R, mu, 2 * mu - 1, exact, lower)


# -- products ------------------------------------------------------------------


def _require_linear_extension(P: Poset, L: Sequence[int], name: str) -> tuple[int, ...]:
    L = tuple(L)
    if sorted(L) != list(P.elements):
        raise ParamError(f"{name} is not a full linear extension")
    if not Ple(L).is_ple_of(P):
        raise NotPleError(f"{name} contradicts the poset order")
    return L


def product_realizer(
    P: Poset,
    Q: Poset,
    RP: LocalRealizer,
    RQ: LocalRealizer,
    L0: Sequence[int] | None = None,
    M0: Sequence[int] | None = None,
) -> LocalRealizer:
    """Local realizer of P x Q (ids as in :func:`localdim.poset.product`).

    Each ple L of ``RP`` becomes the ple on {(a, b): a in L} ordered by L,
    then by ``M0`` inside a fibre; symmetrically for ``RQ`` with ``L0``.
    Frequencies add: mu((x, y)) = mu(x, RP) + mu(y, RQ).
    """
    verify_local_realizer(P, RP).raise_for_violation()
    verify_local_realizer(Q, RQ).raise_for_violation()
    L0 = _require_linear_extension(P, L0 if L0 is not None else P.linear_extension(), "L0")
    M0 = _require_linear_extension(Q, M0 if M0 is not None else Q.linear_extension(), "M0")
    qn = Q.n

    def pid(p: int, q: int) -> int:
        return (p - 1) * qn + q

    ples = [Ple(tuple(pid(a, b) for a in L for b in M0)) for L in RP.ples]
    ples += [Ple(tuple(pid(a, b) for b in M for a in L0)) for M in RQ.ples]
    return LocalRealizer(tuple(ples))


def power_of_chain_realizer(n: int) -> tuple[Poset, ElementMap, LocalRealizer]:
    """Iterated product of ``n`` two-element chains (the Boolean lattice) with
    the frequency-``n`` realizer built factor by factor."""
    if n < 1:
        raise ParamError("need n >= 1")
    two, _ = chain(2)
    R2 = LocalRealizer((Ple((1, 2)),))
    P, R = two, R2
    labels: list[tuple] = [(0,), (1,)]
    for _ in range(n - 1):
        R = product_realizer(P, two, R, R2)
        P, _ = product(P, two)
        labels = [lab + (bit,) for lab in labels for bit in (0, 1)]
    return P, ElementMap.from_labels(labels), R


# -- Bogart extensions -----------------------------------------------------------


def bogart_extension(P: Poset, Ca: Iterable[int], Cb: Iterable[int]) -> tuple[int, ...]:
    """Linear extension with ``x`` below every element incomparable to it for
    ``x`` in ``Ca``, and ``y`` above every element incomparable to it for
    ``y`` in ``Cb``."""
    Ca, Cb = tuple(Ca), tuple(Cb)
    if not P.is_chain(Ca) or not P.is_chain(Cb):
        raise ChainError("Ca and Cb must be chains")
    if any(not P.incomparable(x, y) for x in Ca for y in Cb):
        raise ChainError("every element of Ca must be incomparable to every element of Cb")
    rel = set(P.lt)
    for x in Ca:
        rel.update((x, z) for z in bits(P.incomparable_to(x)))
    for y in Cb:
        rel.update((z, y) for z in bits(P.incomparable_to(y)))
    try:
        augmented = build_poset(P.n, rel)
    except CycleError as exc:  # unreachable for valid chains
        raise InternalCycle(f"augmented order is cyclic: {exc}") from exc
    return augmented.linear_extension()


# -- removal constructions -----------------------------------------------------------


def trivial_local_realizer(P: Poset) -> LocalRealizer:
    """One linear extension plus a two-element ple per pair it leaves unreversed."""
    L = P.linear_extension()
    pos = {x: i for i, x in enumerate(L)}
    ples = [Ple(L)]
    for x, y in P.incomparable_pairs():
        if pos[x] < pos[y]:
            ples.append(Ple((y, x)))
    return LocalRealizer(tuple(ples))


def default_base_realizer(P: Poset, budget: SolveBudget = SolveBudget()) -> LocalRealizer:
    """Optimal witness when the exact solver admits ``P``, else a trivial realizer."""
    limit = budget.max_elements if budget.max_elements is not None else DEFAULT_LDIM_ELEMENTS
    if P.n <= limit:
        return exact_ldim(P, budget).witness
    if P.height() <= 2:
        return height2_local_realizer(P)
    return trivial_local_realizer(P)


BaseRealizer = Callable[[Poset], LocalRealizer]


@dataclass(frozen=True)
class RemovalResult:
    case: str
    removed: tuple[int, ...]
    realizer: LocalRealizer
    reduced: Poset
    reduced_map: ElementMap
    reduced_realizer: LocalRealizer
    mu_before: int
    mu_after: int

    @property
    def mu_delta(self) -> int:
        return self.mu_after - self.mu_before


def _reduced(P: Poset, removed: Sequence[int], reduced_realizer, base: BaseRealizer | None):
    Pr, rmap = P.remove(removed)
    if Pr.n == 0:
        raise PreconditionError("the reduced poset is empty")
    if reduced_realizer is None:
        reduced_realizer = (base or default_base_realizer)(Pr)
    mu = verify_local_realizer(Pr, reduced_realizer).raise_for_violation().mu
    lifted = reduced_realizer.relabel(rmap.backward)
    return Pr, rmap, reduced_realizer, mu, lifted


def _finish(case, P, removed, ples, Pr, rmap, Rr, mu_before) -> RemovalResult:
    R = LocalRealizer(tuple(ples))
    mu_after = verify_local_realizer(P, R).raise_for_violation().mu
    return RemovalResult(case, tuple(removed), R, Pr, rmap, Rr, mu_before, mu_after)


def two_chain_removal(
    P: Poset,
    C1: Sequence[int],
    C2: Sequence[int],
    reduced_realizer: LocalRealizer | None = None,
    base: BaseRealizer | None = None,
) -> RemovalResult:
    """Realizer of P from one of P - (C1 u C2) plus two Bogart extensions."""
    C1, C2 = tuple(C1), tuple(C2)
    if not P.is_chain(C1):
        raise PreconditionError("C1 is not a chain")
    if not P.is_chain(C2):
        raise PreconditionError("C2 is not a chain")
    if set(C1) & set(C2):
        raise PreconditionError("C1 and C2 must be disjoint")
    if any(not P.incomparable(x, y) for x in C1 for y in C2):
        raise PreconditionError("each element of C1 must be incomparable with each element of C2")
    removed = C1 + C2
    if len(set(removed)) == P.n:
        raise PreconditionError("P - (C1 u C2) must be nonempty")
    Pr, rmap, Rr, mu, lifted = _reduced(P, removed, reduced_realizer, base)
    ples = list(lifted.ples) + [Ple(bogart_extension(P, C1, C2)), Ple(bogart_extension(P, C2, C1))]
    case = "two-chain" if C1 and C2 else "one-chain"
    return _finish(case, P, removed, ples, Pr, rmap, Rr, mu)


def one_chain_removal(
    P: Poset,
    C: Sequence[int],
    reduced_realizer: LocalRealizer | None = None,
    base: BaseRealizer | None = None,
) -> RemovalResult:
    return two_chain_removal(P, tuple(C), (), reduced_realizer, base)


def _wrap_around_anchor(P, x, y, Pr, rmap, lifted) -> list[Ple]:
    # anchor: lowest-id element of the reduced poset, in original ids
    z = rmap.backward[1]
    ples = []
    for p in lifted.ples:
        ples.append(Ple((x,) + p.order + (y,)) if z in p else p)
    return ples


def _pair_preconditions(P: Poset, x: int, y: int) -> None:
    if P.n < 3:
        raise PreconditionError("poset needs at least 3 elements")
    if x == y:
        raise PreconditionError("x and y must differ")
    if P.below(x):
        raise PreconditionError(f"{x} is not a minimal element")
    if P.above(y):
        raise PreconditionError(f"{y} is not a maximal element")


def minmax_pair(
    P: Poset,
    x: int,
    y: int,
    reduced_realizer: LocalRealizer | None = None,
    base: BaseRealizer | None = None,
) -> RemovalResult:
    """x minimal, y maximal, x || y: wrap the anchor's ple's as x < L < y and
    add one extension placing x above and y below all their incomparables."""
    _pair_preconditions(P, x, y)
    if not P.incomparable(x, y):
        raise PreconditionError(f"{x} and {y} must be incomparable")
    Pr, rmap, Rr, mu, lifted = _reduced(P, (x, y), reduced_realizer, base)
    ples = _wrap_around_anchor(P, x, y, Pr, rmap, lifted)
    ples.append(Ple(bogart_extension(P, (y,), (x,))))
    return _finish("minmax-pair", P, (x, y), ples, Pr, rmap, Rr, mu)


def special_pair(
    P: Poset,
    x: int,
    y: int,
    reduced_realizer: LocalRealizer | None = None,
    base: BaseRealizer | None = None,
) -> RemovalResult:
    """x minimal, y maximal, x < y, nothing incomparable to both: wrap the
    anchor's ple's as x < L < y, then add I_x < x and y < I_y."""
    _pair_preconditions(P, x, y)
    if not P.less(x, y):
        raise PreconditionError(f"{x} < {y} must hold")
    inc_x, inc_y = P.incomparable_to(x), P.incomparable_to(y)
    if inc_x & inc_y:
        raise PreconditionError("some element is incomparable to both x and y")
    Pr, rmap, Rr, mu, lifted = _reduced(P, (x, y), reduced_realizer, base)
    ples = _wrap_around_anchor(P, x, y, Pr, rmap, lifted)
    if inc_x:
        ples.append(Ple(P.linear_extension(inc_x) + (x,)))
    if inc_y:
        ples.append(Ple((y,) + P.linear_extension(inc_y)))
    return _finish("special-pair", P, (x, y), ples, Pr, rmap, Rr, mu)


# -- removable pair / quadruple --------------------------------------------------------


@dataclass(frozen=True)
class PairResult:
    x: int
    y: int
    case: str
    construction: RemovalResult
    ldim: int | None = None
    ldim_reduced: int | None = None

    @property
    def certified(self) -> bool | None:
        if self.ldim is None or self.ldim_reduced is None:
            return None
        return self.ldim <= self.ldim_reduced + 1


def choose_pair_height2(P: Poset) -> tuple[int, int, str]:
    """(x, y, case) for a poset of height at most two.

    Prefers a minimal x incomparable to a maximal y; when every minimal
    element lies below every maximal one, takes the first of each class.
    """
    if P.n < 3:
        raise SizeError("removable pair needs at least 3 elements")
    if P.height() > 2:
        raise HeightError(f"poset has height {P.height()} > 2")
    minimal, maximal = P.minimal(), P.maximal()
    if P.height() == 1:
        return minimal[0], minimal[1], "antichain"
    for x in minimal:
        for y in maximal:
            if x != y and P.incomparable(x, y):
                return x, y, "incomparable-min-max"
    A, B = height2_classes(P)
    return A[0], B[0], "all-comparable"


def _pair_construction(P, x, y, case, reduced_realizer, base) -> RemovalResult:
    if case == "all-comparable":
        return special_pair(P, x, y, reduced_realizer, base)
    return minmax_pair(P, x, y, reduced_realizer, base)


def removable_pair_height2(
    P: Poset,
    budget: SolveBudget | None = SolveBudget(),
    base: BaseRealizer | None = None,
) -> PairResult:
    """Pick a removable pair of a height-<=2 poset, build the realizer of P from
    one of P - {x, y}, and, when the exact solver admits P, certify
    ldim(P) <= ldim(P - {x, y}) + 1 numerically."""
    x, y, case = choose_pair_height2(P)
    construction = _pair_construction(P, x, y, case, None, base)
    ldim = ldim_reduced = None
    if budget is not None:
        try:
            ldim = exact_ldim(P, budget).value
            ldim_reduced = exact_ldim(construction.reduced, budget).value
        except BudgetExceeded:
            ldim = ldim_reduced = None
    return PairResult(x, y, case, construction, ldim, ldim_reduced)


@dataclass(frozen=True)
class QuadrupleResult:
    elements: tuple[int, int, int, int]
    case: str
    steps: tuple[RemovalResult, ...]
    realizer: LocalRealizer
    reduced: Poset
    reduced_realizer: LocalRealizer
    mu_before: int
    mu_after: int

    @property
    def mu_delta(self) -> int:
        return self.mu_after - self.mu_before


def _three_chains(P: Poset):
    for b in P.elements:
        for a in bits(P.below(b)):
            for c in bits(P.above(b)):
                yield a, b, c


def _two_step(P, first, second_of_reduced, base) -> tuple[RemovalResult, RemovalResult]:
    """Run ``first`` (x, y, kind) on P, then ``second_of_reduced`` on P - {x, y};
    the inner construction feeds the outer one."""
    x, y, kind = first
    P1, map1 = P.remove((x, y))
    x2, y2, kind2 = second_of_reduced(P1)
    inner = _pair_by_kind(P1, x2, y2, kind2, None, base)
    outer = _pair_by_kind(P, x, y, kind, inner.realizer, base)
    return outer, inner


def _pair_by_kind(P, x, y, kind, reduced_realizer, base) -> RemovalResult:
    if kind == "special-pair" or kind == "all-comparable":
        return special_pair(P, x, y, reduced_realizer, base)
    return minmax_pair(P, x, y, reduced_realizer, base)


def removable_quadruple(P: Poset, base: BaseRealizer | None = None) -> QuadrupleResult:
    """Four elements whose removal lowers ldim by at most two, with the realizer
    of P built from one of the reduced poset."""
    if P.n < 5:
        raise SizeError("removable quadruple needs at least 5 elements")
    h = P.height()
    if h >= 4:
        C = P.longest_chain()[:4]
        step = one_chain_removal(P, C, base=base)
        return _quad_result(P, C, "four-chain", (step,))
    if h <= 2:
        outer, inner = _two_step(P, choose_pair_height2(P), choose_pair_height2, base)
        return _quad_from_pairs(P, "height-two-pairs", outer, inner)
    for a, b, c in _three_chains(P):
        for z in P.elements:
            if P.incomparable(z, a) and P.incomparable(z, c):
                step = two_chain_removal(P, (a, b, c), (z,), base=base)
                return _quad_result(P, (a, b, c, z), "three-chain-plus-z", (step,))
    a0, _, c0 = next(_three_chains(P))

    def second(P1: Poset):
        if P1.height() <= 2:
            return choose_pair_height2(P1)
        a1, _, c1 = next(_three_chains(P1))
        return a1, c1, "special-pair"

    outer, inner = _two_step(P, (a0, c0, "special-pair"), second, base)
    return _quad_from_pairs(P, "special-pairs", outer, inner)


def _quad_from_pairs(P, case, outer: RemovalResult, inner: RemovalResult) -> QuadrupleResult:
    back = outer.reduced_map.backward
    elements = outer.removed + tuple(back[v] for v in inner.removed)
    return _quad_result(P, elements, case, (outer, inner))


def _quad_result(P, elements, case, steps) -> QuadrupleResult:
    last = steps[-1]
    reduced, _ = P.remove(elements)
    return QuadrupleResult(
        tuple(elements), case, tuple(steps), steps[0].realizer, reduced,
        last.reduced_realizer, last.mu_before, steps[0].mu_after,
    )


# -- Young-diagram covers -----------------------------------------------------------


@dataclass(frozen=True)
class RectCover:
    """Rectangles (row set x column set) inside the Young diagram of ``H``."""

    H: DifferenceGraph
    rectangles: tuple[Member, ...]
    report: CoverReport = field(compare=False)

    @property
    def max_multiplicity(self) -> int:
        return self.report.max_multiplicity


def _rect_cover(H: DifferenceGraph, rects: list[Member]) -> RectCover:
    G = H.to_bipartite()
    report = verify_cover(G, rects, BICLIQUE).raise_for_violation()
    return RectCover(H, tuple(rects), report)


def young_cover(H: DifferenceGraph) -> RectCover:
    """Recursive rectangle partition with multiplicity <= ceil(log2(m + 1)) for m rows.

    The rectangle on the top half of the rows (through row ceil(m/2), as wide
    as that row) leaves two independent staircases, covered recursively.
    """
    rects: list[Member] = []

    def cover(rows: list[int], f: list[int], col0: int) -> None:
        m = len(rows)
        if m == 0:
            return
        h = (m + 1) // 2
        width = f[h - 1]
        rects.append(Member.rect(rows[:h], range(col0 + 1, col0 + width + 1)))
        cover(rows[h:], f[h:], col0)
        wide = [i for i in range(h - 1) if f[i] > width]
        cover([rows[i] for i in wide], [f[i] - width for i in wide], col0 + width)

    cover(list(range(1, H.a + 1)), list(H.f), 0)
    return _rect_cover(H, rects)


_BASE_H3 = [((1, 2, 3), (1,)), ((1,), (2, 3)), ((2,), (2,))]
_BASE_H7 = [
    ((1, 2, 3), (1, 2, 3, 4, 5)),
    ((1,), (6, 7)),
    ((2,), (6,)),
    ((4, 5), (1, 2, 3)),
    ((4,), (4,)),
    ((6, 7), (1,)),
    ((6,), (2,)),
]


@dataclass(frozen=True)
class StaircaseCover:
    k: int
    n: int
    cover: RectCover
    row_max: int
    col_max: int
    target: int  # log2(n + 1) - 1

    @property
    def max_multiplicity(self) -> int:
        return max(self.row_max, self.col_max)

    @property
    def meets_target(self) -> bool:
        return self.max_multiplicity <= self.target


def _staircase_rects(k: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    if k == 2:
        return list(_BASE_H3)
    if k == 3:
        return list(_BASE_H7)
    half = 2 ** (k - 1)
    inner = _staircase_rects(k - 1)
    square = (tuple(range(1, half + 1)), tuple(range(1, half + 1)))
    top_right = [(rows, tuple(c + half for c in cols)) for rows, cols in inner]
    bottom_left = [(tuple(c + half for c in cols), rows) for rows, cols in inner]
    return [square] + top_right + bottom_left


def staircase_cover(k: int) -> StaircaseCover:
    """Rectangle cover of H_n, n = 2**k - 1.

    H_3 and H_7 use fixed base covers.  For larger k the cover is a central
    square, the (k-1)-cover to its right sharing rows, and its transpose
    below sharing columns, so row and column multiplicity grow by one per level.
    """
    if k < 2:
        raise ParamError("staircase cover needs k >= 2")
    n = 2**k - 1
    rects = [Member.rect(r, c) for r, c in _staircase_rects(k)]
    rc = _rect_cover(staircase(n), rects)
    return StaircaseCover(k, n, rc, rc.report.row_max, rc.report.col_max, k - 1)


# -- Boolean lattice lower bound arithmetic -------------------------------------------


@dataclass(frozen=True)
class BoundReport:
    n: int
    k: int
    b: int
    lhs: Fraction  # (n / b) * C(n - b, k - b): left side of the counting inequality at ell = 1
    rhs: int  # C(n, k)
    implied_ell: Fraction | None  # rhs / lhs; None when k < b (no big difference graph exists)
    chain_ratio: Fraction | None  # C(n, k) / C(n - b, k - b)
    chain_power: Fraction  # (n / k) ** b
    chain_holds: bool
    small_case: Fraction  # k / (b - 1): bound when no member is big at some set
    bound_value: float  # n / (2 e ln n)

    def render(self) -> str:
        rows = [
            ("n", self.n),
            ("k", self.k),
            ("b", self.b),
            ("lhs", _fmt_frac(self.lhs)),
            ("rhs", _fmt_frac(Fraction(self.rhs))),
            ("implied_ell", _fmt_frac(self.implied_ell)),
            ("chain_ratio", _fmt_frac(self.chain_ratio)),
            ("chain_power", _fmt_frac(self.chain_power)),
            ("chain_holds", "yes" if self.chain_holds else "no"),
            ("small_case", _fmt_frac(self.small_case)),
            ("bound_value", f"{self.bound_value:.6f}"),
        ]
        width = max(len(k) for k, _ in rows)
        return "".join(f"{k.ljust(width)}  {v}\n" for k, v in rows)


def _fmt_frac(x: Fraction | None) -> str:
    if x is None:
        return "inf"
    if x.denominator == 1 and abs(x.numerator) < 10**15:
        return str(x.numerator)
    return f"{float(x):.6g}"


def boolean_lb_report(n: int) -> BoundReport:
    """Exact evaluation of the counting inequality behind the Boolean lattice
    lower bound, with k = ceil(n / e) and b = ceil(2 ln n)."""
    if n < 8:
        raise ParamError("boolean bound report needs n >= 8")
    k = math.ceil(n / math.e)
    b = math.ceil(2 * math.log(n))
    rhs = math.comb(n, k)
    inner = math.comb(n - b, k - b) if k >= b else 0
    lhs = Fraction(n, b) * inner
    implied = Fraction(rhs) / lhs if inner else None
    ratio = Fraction(rhs, inner) if inner else None
    power = Fraction(n, k) ** b
    holds = ratio is None or ratio >= power
    return BoundReport(
        n, k, b, lhs, rhs, implied, ratio, power, holds,
        Fraction(k, b - 1), n / (2 * math.e * math.log(n)),
    )
