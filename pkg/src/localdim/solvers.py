"""Exact, certificate-producing solvers for dim, ldim, lbc, ldc and tdc.

All solvers are exhaustive and deterministic.  They refuse instances larger
than their :class:`SolveBudget` instead of silently degrading, and every
result carries a witness that the verifiers in :mod:`localdim.realizer` and
:mod:`localdim.diffgraph` accept at exactly the returned value.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, replace
from typing import Any

from .diffgraph import (
    BICLIQUE,
    DIFFERENCE,
    BipartiteGraph,
    CoverFamily,
    Member,
)
from .errors import BudgetExceeded, NodeLimit, ParamError
from .poset import Poset, bits, to_mask
from .realizer import LocalRealizer, Ple

LBC = "lbc"
LDC = "ldc"
TDC = "tdc"
COVER_KINDS = (LBC, LDC, TDC)

DEFAULT_DIM_ELEMENTS = 8
DEFAULT_LDIM_ELEMENTS = 6
DEFAULT_COVER_EDGES = 20


@dataclass(frozen=True)
class SolveBudget:
    """Hard limits for an exact solve; ``None`` means the solver's default / unlimited."""

    max_elements: int | None = None
    max_edges: int | None = None
    node_limit: int | None = 20_000_000
    time_limit_ms: int | None = None

    def __post_init__(self) -> None:
        for name in ("max_elements", "max_edges", "node_limit", "time_limit_ms"):
            value = getattr(self, name)
            if value is not None and value <= 0:
                raise ParamError(f"budget field {name} must be positive")


@dataclass(frozen=True)
class SolveStats:
    nodes: int
    wall_time: float


@dataclass(frozen=True)
class SolveResult:
    value: int
    witness: Any
    stats: SolveStats


class _Clock:
    def __init__(self, budget: SolveBudget):
        self.nodes = 0
        self.node_limit = budget.node_limit
        self.start = time.perf_counter()
        self.deadline = (
            None if budget.time_limit_ms is None else self.start + budget.time_limit_ms / 1000.0
        )

    def tick(self) -> None:
        self.nodes += 1
        if self.node_limit is not None and self.nodes > self.node_limit:
            raise NodeLimit(f"node limit {self.node_limit} exceeded")
        if self.deadline is not None and self.nodes & 1023 == 0 and time.perf_counter() > self.deadline:
            raise BudgetExceeded("time limit exceeded")

    def stats(self) -> SolveStats:
        return SolveStats(self.nodes, time.perf_counter() - self.start)


def _check_size(P: Poset, budget: SolveBudget, default: int) -> None:
    limit = budget.max_elements if budget.max_elements is not None else default
    if P.n > limit:
        raise BudgetExceeded(f"poset has {P.n} elements, budget allows {limit}")
    if P.n < 1:
        raise ParamError("poset must be nonempty")


# -- dimension -----------------------------------------------------------------


def critical_pairs(P: Poset) -> list[tuple[int, int]]:
    """Incomparable ``(x, y)`` with D(x) within D(y) and U(y) within U(x)."""
    return [
        (x, y)
        for x, y in P.incomparable_pairs()
        if P.below(x) & ~P.below(y) == 0 and P.above(y) & ~P.above(x) == 0
    ]


def exact_dim(P: Poset, budget: SolveBudget = SolveBudget()) -> SolveResult:
    """Minimum realizer size by set cover of critical pairs with linear extensions.

    A family of linear extensions realizes ``P`` iff every critical pair
    ``(x, y)`` is reversed (``y`` before ``x``) by some member, so the cover
    universe is the critical pairs.  Each distinct reversal pattern keeps its
    lexicographically first extension; dominated patterns are dropped.
    """
    _check_size(P, budget, DEFAULT_DIM_ELEMENTS)
    clock = _Clock(budget)
    crit = critical_pairs(P)
    if not crit:
        return SolveResult(1, [P.linear_extension()], clock.stats())

    patterns: dict[int, tuple[int, ...]] = {}
    for ext in P.linear_extensions():
        clock.tick()
        pos = {x: i for i, x in enumerate(ext)}
        mask = 0
        for k, (x, y) in enumerate(crit):
            if pos[y] < pos[x]:
                mask |= 1 << k
        patterns.setdefault(mask, ext)
    masks = sorted(patterns, key=lambda m: (-m.bit_count(), patterns[m]))
    kept: list[int] = []
    for m in masks:
        if not any(m & ~k == 0 for k in kept):
            kept.append(m)
    universe = (1 << len(crit)) - 1
    covering = [[m for m in kept if m >> k & 1] for k in range(len(crit))]
    widest = max(m.bit_count() for m in kept)

    def search(uncovered: int, depth: int, chosen: list[int]) -> bool:
        clock.tick()
        if not uncovered:
            return True
        if depth == 0 or uncovered.bit_count() > depth * widest:
            return False
        pick = min(bits(uncovered), key=lambda k: (len(covering[k]), k))
        for m in covering[pick]:
            chosen.append(m)
            if search(uncovered & ~m, depth - 1, chosen):
                return True
            chosen.pop()
        return False

    for k in range(2, len(kept) + 1):
        chosen: list[int] = []
        if search(universe, k, chosen):
            return SolveResult(k, [patterns[m] for m in chosen], clock.stats())
    raise AssertionError("critical pairs cannot all be reversed")  # pragma: no cover


# -- local dimension -------------------------------------------------------------


def _requirements(P: Poset) -> list[int]:
    """``need[u]``: the ``v`` that must follow ``u`` in some ple."""
    return [0] + [P.above(u) | P.incomparable_to(u) for u in P.elements]


def ple_pool(P: Poset) -> list[Ple]:
    """Every linear extension of every induced subposet with at least two
    elements, ordered by (ground set, order)."""
    pool = []
    elements = list(P.elements)
    for size in range(2, P.n + 1):
        for ground in _combinations(elements, size):
            for ext in P.linear_extensions(to_mask(ground)):
                pool.append(Ple(ext))
    pool.sort(key=lambda p: (tuple(sorted(p.order)), p.order))
    return pool


def _combinations(items, r):
    from itertools import combinations

    return combinations(items, r)


def _ldim_pool(P: Poset, mu: int, pool: list[Ple], clock: _Clock) -> list[Ple] | None:
    need = _requirements(P)
    reqs = [(u, v) for u in P.elements for v in bits(need[u])]
    index = {r: k for k, r in enumerate(reqs)}
    sat = []
    for p in pool:
        mask = 0
        for i, x in enumerate(p.order):
            for y in p.order[i + 1 :]:
                k = index.get((x, y))
                if k is not None:
                    mask |= 1 << k
        sat.append(mask)
    by_req = [[j for j, m in enumerate(sat) if m >> k & 1] for k in range(len(reqs))]
    freq = [0] * (P.n + 1)
    chosen: list[int] = []
    failed: set = set()

    def feasible(j: int) -> bool:
        return all(freq[x] < mu for x in pool[j].order)

    def search(unmet: int) -> bool:
        clock.tick()
        if not unmet:
            return True
        key = (unmet, tuple(sorted(chosen)))
        if key in failed:
            return False
        best = None
        for k in bits(unmet):
            opts = [j for j in by_req[k] if feasible(j)]
            if best is None or len(opts) < len(best):
                best = opts
                if len(opts) <= 1:
                    break
        for j in best:
            chosen.append(j)
            for x in pool[j].order:
                freq[x] += 1
            if search(unmet & ~sat[j]):
                return True
            for x in pool[j].order:
                freq[x] -= 1
            chosen.pop()
        failed.add(key)
        return False

    if search((1 << len(reqs)) - 1):
        return [pool[j] for j in chosen]
    return None


def _ldim_incremental(P: Poset, mu: int, clock: _Clock) -> list[Ple] | None:
    """Search for a local realizer with maximum frequency ``mu``.

    Instead of picking finished ple's from a pool, ple's are grown: an unmet
    requirement "u before v" is met either by inserting the missing element(s)
    into a ple already under construction, at every admissible position, or
    by opening a new ple ``[u, v]``.  Any local realizer restricted to the
    elements placed so far is reachable this way and frequencies only grow,
    so pruning at ``mu`` and memoising failed states keeps the search exact.
    """
    n = P.n
    need = _requirements(P)
    below = [0] + [P.below(x) for x in P.elements]
    above = [0] + [P.above(x) for x in P.elements]
    ples: list[list[int]] = []
    freq = [0] * (n + 1)
    failed: set = set()

    def interval(e: int, s: list[int]) -> tuple[int, int]:
        lo, hi = 0, len(s)
        be, ab = below[e], above[e]
        for i, x in enumerate(s):
            if be >> x & 1:
                lo = i + 1
            elif ab >> x & 1:
                hi = i
                break
        return lo, hi

    def options(u: int, v: int) -> list:
        out = []
        room_u, room_v = freq[u] < mu, freq[v] < mu
        for j, s in enumerate(ples):
            has_u, has_v = u in s, v in s
            if has_u and has_v:
                continue
            if has_u:
                if room_v:
                    pu = s.index(u)
                    lo, hi = interval(v, s)
                    out.extend((j, ((v, p),)) for p in range(max(lo, pu + 1), hi + 1))
            elif has_v:
                if room_u:
                    pv = s.index(v)
                    lo, hi = interval(u, s)
                    out.extend((j, ((u, p),)) for p in range(lo, min(hi, pv) + 1))
            elif room_u and room_v:
                lo_u, hi_u = interval(u, s)
                lo_v, hi_v = interval(v, s)
                for pu in range(lo_u, hi_u + 1):
                    # v goes in first so that u's index is still valid
                    out.extend((j, ((v, pv), (u, pu))) for pv in range(max(pu, lo_v), hi_v + 1))
        if room_u and room_v:
            out.append((-1, ((u, 0), (v, 1))))
        return out

    def apply(opt) -> None:
        j, inserts = opt
        if j < 0:
            ples.append([])
            j = len(ples) - 1
        for e, p in inserts:
            ples[j].insert(p, e)
            freq[e] += 1

    def undo(opt) -> None:
        j, inserts = opt
        if j < 0:
            s = ples.pop()
            for e in s:
                freq[e] -= 1
            return
        for e, _ in inserts:
            ples[j].remove(e)
            freq[e] -= 1

    def search() -> bool:
        clock.tick()
        key = tuple(sorted(tuple(s) for s in ples))
        if key in failed:
            return False
        after = [0] * (n + 1)
        for s in ples:
            suffix = 0
            for x in reversed(s):
                after[x] |= suffix
                suffix |= 1 << x
        best = None
        for u in range(1, n + 1):
            for v in bits(need[u] & ~after[u]):
                opts = options(u, v)
                if best is None or len(opts) < len(best):
                    best = opts
                    if len(opts) <= 1:
                        break
            if best is not None and len(best) <= 1:
                break
        if best is None:
            return True
        for opt in best:
            apply(opt)
            if search():
                return True
            undo(opt)
        failed.add(key)
        return False

    if search():
        return [Ple(tuple(s)) for s in ples]
    return None


def exact_ldim(
    P: Poset, budget: SolveBudget = SolveBudget(), method: str = "incremental"
) -> SolveResult:
    """Local dimension by iterative deepening on the target frequency.

    ``method="pool"`` searches over the explicit pool of all ple's; the
    default ``"incremental"`` grows ple's in place (same optimum, far fewer
    branches).  The witness is a :class:`LocalRealizer` whose maximum
    frequency equals the returned value.
    """
    _check_size(P, budget, DEFAULT_LDIM_ELEMENTS)
    if method not in ("incremental", "pool"):
        raise ParamError(f"unknown ldim method {method!r}")
    clock = _Clock(budget)
    if P.n == 1:
        return SolveResult(1, LocalRealizer((Ple((1,)),)), clock.stats())
    pool = ple_pool(P) if method == "pool" else None
    # an incomparable pair needs two ple's holding both elements
    mu = 1 if not P.incomparable_pairs() else 2
    while True:
        if method == "pool":
            found = _ldim_pool(P, mu, pool, clock)
        else:
            found = _ldim_incremental(P, mu, clock)
        if found is not None:
            return SolveResult(mu, LocalRealizer(tuple(found)), clock.stats())
        mu += 1


# -- cover numbers ---------------------------------------------------------------


def biclique_candidates(G: BipartiteGraph) -> list[Member]:
    """Every biclique ``S x T`` (both sides nonempty) inside ``G``."""
    from itertools import combinations

    rows = sorted({r for r, _ in G.edges})
    nbrs = {r: G.row_neighbours(r) for r in rows}
    out = []
    for size in range(1, len(rows) + 1):
        for S in combinations(rows, size):
            common = frozenset.intersection(*(nbrs[r] for r in S))
            cols = sorted(common)
            for tsize in range(1, len(cols) + 1):
                for T in combinations(cols, tsize):
                    out.append(Member(S, T))
    return out


def difference_candidates(G: BipartiteGraph) -> list[Member]:
    """Nested-neighbourhood subgraphs of ``G`` that are edge-maximal for their vertex set."""
    from itertools import combinations

    rows = sorted({r for r, _ in G.edges})
    nbr_subsets = {}
    for r in rows:
        cols = sorted(G.row_neighbours(r))
        nbr_subsets[r] = [frozenset(c) for k in range(1, len(cols) + 1) for c in combinations(cols, k)]
    found: dict[tuple, list[frozenset]] = {}

    def rec(i: int, chosen: list[tuple[int, frozenset]]) -> None:
        if i == len(rows):
            if chosen:
                edges = frozenset((r, c) for r, N in chosen for c in N)
                vset = (tuple(r for r, _ in chosen), frozenset().union(*(N for _, N in chosen)))
                found.setdefault(vset, []).append(edges)
            return
        rec(i + 1, chosen)
        r = rows[i]
        for N in nbr_subsets[r]:
            if all(N <= M or M <= N for _, M in chosen):
                chosen.append((r, N))
                rec(i + 1, chosen)
                chosen.pop()

    rec(0, [])
    out = []
    for edge_sets in found.values():
        for E in edge_sets:
            if not any(E < F for F in edge_sets):
                out.append(Member.from_edges(E))
    return out


def exact_cover_number(
    G: BipartiteGraph, kind: str, budget: SolveBudget = SolveBudget()
) -> SolveResult:
    """lbc (local, bicliques), ldc (local, difference graphs) or tdc (total vertex
    count, difference graphs) of ``G``, with a witness cover.

    Local objectives use iterative deepening on the allowed multiplicity;
    tdc uses depth-first branch and bound with an incumbent.  Branching is on
    the uncovered edge with fewest usable candidates (ties: larger endpoint
    degree, then edge order).
    """
    if kind not in COVER_KINDS:
        raise ParamError(f"unknown cover kind {kind!r}; use one of {COVER_KINDS}")
    limit = budget.max_edges if budget.max_edges is not None else DEFAULT_COVER_EDGES
    if len(G.edges) > limit:
        raise BudgetExceeded(f"graph has {len(G.edges)} edges, budget allows {limit}")
    clock = _Clock(budget)
    if not G.edges:
        return SolveResult(0, CoverFamily(G, ()), clock.stats())

    cands = biclique_candidates(G) if kind == LBC else difference_candidates(G)
    edges = G.sorted_edges()
    eidx = {e: k for k, e in enumerate(edges)}
    cmask = [sum(1 << eidx[e] for e in m.edges()) for m in cands]
    verts = [[r for r in m.rows] + [G.a + c for c in m.cols] for m in cands]
    degree = [0] * (G.a + G.b + 1)
    for r, c in edges:
        degree[r] += 1
        degree[G.a + c] += 1
    # candidates per edge, most edges per vertex first
    order = sorted(range(len(cands)), key=lambda j: (-cmask[j].bit_count() / len(verts[j]), len(verts[j]), j))
    by_edge = [[j for j in order if cmask[j] >> k & 1] for k in range(len(edges))]
    edge_weight = [-(max(degree[r], degree[G.a + c])) for r, c in edges]
    full = (1 << len(edges)) - 1

    if kind == TDC:
        value, chosen = _tdc_search(full, by_edge, cmask, verts, edge_weight, clock)
    else:
        value, chosen = _local_cover_search(full, by_edge, cmask, verts, edge_weight, G.a + G.b, clock)
    family = CoverFamily(G, tuple(cands[j] for j in chosen))
    return SolveResult(value, family, clock.stats())


def _local_cover_search(full, by_edge, cmask, verts, edge_weight, nv, clock):
    mult = [0] * (nv + 1)
    chosen: list[int] = []

    def search(uncovered: int, ell: int, failed: set) -> bool:
        clock.tick()
        if not uncovered:
            return True
        key = (uncovered, tuple(mult))
        if key in failed:
            return False
        best, best_w = None, 0
        for k in bits(uncovered):
            opts = [j for j in by_edge[k] if all(mult[v] < ell for v in verts[j])]
            if best is None or (len(opts), edge_weight[k]) < (len(best), best_w):
                best, best_w = opts, edge_weight[k]
                if not opts:
                    break
        for j in best:
            chosen.append(j)
            for v in verts[j]:
                mult[v] += 1
            if search(uncovered & ~cmask[j], ell, failed):
                return True
            for v in verts[j]:
                mult[v] -= 1
            chosen.pop()
        failed.add(key)
        return False

    ell = 1
    while not search(full, ell, set()):
        ell += 1
    return ell, list(chosen)


def _tdc_search(full, by_edge, cmask, verts, edge_weight, clock):
    # incumbent: one single-edge member per edge
    best_cost = 2 * full.bit_count() + 1
    best_choice: list[int] = []
    seen: dict[int, int] = {}
    chosen: list[int] = []

    def search(uncovered: int, cost: int) -> None:
        nonlocal best_cost, best_choice
        clock.tick()
        if not uncovered:
            if cost < best_cost:
                best_cost, best_choice = cost, list(chosen)
            return
        if cost + 2 >= best_cost:
            return
        if seen.get(uncovered, best_cost + 1) <= cost:
            return
        seen[uncovered] = cost
        k = min(bits(uncovered), key=lambda e: (len(by_edge[e]), edge_weight[e], e))
        for j in by_edge[k]:
            rest = uncovered & ~cmask[j]
            new_cost = cost + len(verts[j])
            if new_cost + (2 if rest else 0) >= best_cost:
                continue
            chosen.append(j)
            search(rest, new_cost)
            chosen.pop()

    search(full, 0)
    return best_cost, best_choice


def cover_kind_for_verifier(kind: str) -> str:
    return BICLIQUE if kind == LBC else DIFFERENCE


def with_elements(budget: SolveBudget, n: int) -> SolveBudget:
    """Copy of ``budget`` whose element cap admits ``n`` elements."""
    cap = budget.max_elements
    return replace(budget, max_elements=max(cap or 0, n))
