"""Finite posets on dense ids 1..n, their generators and text format.

A :class:`Poset` stores its strict order transitively closed, both as a set
of pairs and as per-element bitmasks (bit ``i`` stands for element ``i``), so
comparability queries are O(1).  Every generator returns the poset together
with an :class:`ElementMap` that translates ids back to readable labels.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Hashable, Iterable, Iterator, Mapping, Sequence

from .errors import CycleError, IdRangeError, ParamError, ParseError, SizeError

MAX_PRODUCT_ELEMENTS = 4096
MAX_CANONICAL_ELEMENTS = 8


def bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(elements: Iterable[int]) -> int:
    mask = 0
    for x in elements:
        mask |= 1 << x
    return mask


@dataclass(frozen=True)
class ElementMap:
    """Bijection between readable labels and element ids."""

    forward: Mapping[Hashable, int]
    backward: Mapping[int, Hashable]

    @classmethod
    def from_labels(cls, labels: Sequence[Hashable]) -> "ElementMap":
        """Label ``labels[i]`` gets id ``i + 1``."""
        forward = {lab: i for i, lab in enumerate(labels, start=1)}
        if len(forward) != len(labels):
            raise ParamError("element labels must be distinct")
        return cls(forward, dict(enumerate(labels, start=1)))

    @classmethod
    def identity(cls, n: int) -> "ElementMap":
        return cls.from_labels(list(range(1, n + 1)))

    def id_of(self, label: Hashable) -> int:
        return self.forward[label]

    def label_of(self, i: int) -> Hashable:
        return self.backward[i]

    def __len__(self) -> int:
        return len(self.forward)


@dataclass(frozen=True)
class Poset:
    """Strict partial order on ``1..n``; ``lt`` holds every pair ``(i, j)`` with ``i < j``.

    The constructor checks the three order axioms; use :func:`build_poset` to
    start from an arbitrary generating set of relations.
    """

    n: int
    lt: frozenset
    _below: tuple = field(init=False, repr=False, compare=False)
    _above: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ParamError("poset size must be non-negative")
        below = [0] * (self.n + 1)
        above = [0] * (self.n + 1)
        for i, j in self.lt:
            _check_ids(self.n, (i, j))
            below[j] |= 1 << i
            above[i] |= 1 << j
        object.__setattr__(self, "_below", tuple(below))
        object.__setattr__(self, "_above", tuple(above))
        self.validate()

    def validate(self) -> None:
        """Re-check irreflexivity, antisymmetry and transitivity."""
        for i in self.elements:
            if self._above[i] >> i & 1:
                raise CycleError(f"element {i} lies below itself")
            if self._above[i] & self._below[i]:
                raise CycleError(f"relation through {i} is not antisymmetric")
            for j in bits(self._above[i]):
                if self._above[j] & ~self._above[i]:
                    raise ParamError(f"relation set is not transitively closed at {i} < {j}")

    # -- element-level queries -------------------------------------------

    @property
    def elements(self) -> range:
        return range(1, self.n + 1)

    @property
    def full_mask(self) -> int:
        return ((1 << (self.n + 1)) - 1) ^ 1

    def below(self, x: int) -> int:
        """Bitmask of the elements strictly below ``x``."""
        return self._below[x]

    def above(self, x: int) -> int:
        """Bitmask of the elements strictly above ``x``."""
        return self._above[x]

    def incomparable_to(self, x: int) -> int:
        """Bitmask of the elements incomparable to ``x`` (``x`` itself excluded)."""
        return self.full_mask & ~(self._below[x] | self._above[x] | (1 << x))

    def less(self, x: int, y: int) -> bool:
        return bool(self._above[x] >> y & 1)

    def comparable(self, x: int, y: int) -> bool:
        return x == y or self.less(x, y) or self.less(y, x)

    def incomparable(self, x: int, y: int) -> bool:
        return not self.comparable(x, y)

    def minimal(self) -> tuple[int, ...]:
        return tuple(x for x in self.elements if not self._below[x])

    def maximal(self) -> tuple[int, ...]:
        return tuple(x for x in self.elements if not self._above[x])

    def comparable_pairs(self) -> list[tuple[int, int]]:
        return sorted(self.lt)

    def incomparable_pairs(self) -> list[tuple[int, int]]:
        """Inc(P) as ordered pairs, both orientations, lexicographic."""
        return [(x, y) for x in self.elements for y in bits(self.incomparable_to(x))]

    def height(self) -> int:
        """Number of elements in a longest chain."""
        level = [0] * (self.n + 1)
        for x in self.linear_extension():
            level[x] = 1 + max((level[y] for y in bits(self._below[x])), default=0)
        return max(level, default=0)

    def longest_chain(self) -> tuple[int, ...]:
        level = [0] * (self.n + 1)
        pred = [0] * (self.n + 1)
        for x in self.linear_extension():
            for y in bits(self._below[x]):
                if level[y] > level[pred[x]]:
                    pred[x] = y
            level[x] = 1 + level[pred[x]]
        if self.n == 0:
            return ()
        top = max(self.elements, key=lambda x: (level[x], -x))
        chain = []
        while top:
            chain.append(top)
            top = pred[top]
        return tuple(reversed(chain))

    def is_chain(self, elements: Iterable[int]) -> bool:
        items = list(elements)
        return all(self.comparable(x, y) for x, y in itertools.combinations(items, 2))

    def is_antichain(self) -> bool:
        return not self.lt

    def covers(self) -> list[tuple[int, int]]:
        """Covering (Hasse) relations ``(x, y)``: ``x < y`` with nothing in between."""
        out = []
        for x, y in sorted(self.lt):
            if not self._above[x] & self._below[y]:
                out.append((x, y))
        return out

    # -- linear extensions -----------------------------------------------

    def linear_extension(self, mask: int | None = None) -> tuple[int, ...]:
        """The lexicographically least linear extension of the subposet on ``mask``."""
        remaining = self.full_mask if mask is None else mask
        order = []
        while remaining:
            x = next(y for y in bits(remaining) if not self._below[y] & remaining)
            order.append(x)
            remaining &= ~(1 << x)
        return tuple(order)

    def linear_extensions(self, mask: int | None = None) -> Iterator[tuple[int, ...]]:
        """All linear extensions of the subposet induced on ``mask``, lexicographically."""
        remaining = self.full_mask if mask is None else mask
        prefix: list[int] = []

        def rec(rest: int) -> Iterator[tuple[int, ...]]:
            if not rest:
                yield tuple(prefix)
                return
            for x in bits(rest):
                if not self._below[x] & rest:
                    prefix.append(x)
                    yield from rec(rest & ~(1 << x))
                    prefix.pop()

        yield from rec(remaining)

    # -- subposets -------------------------------------------------------

    def induced_subposet(self, elements: Iterable[int]) -> tuple["Poset", ElementMap]:
        """Subposet on ``elements``, relabelled ``1..k`` in increasing id order.

        The returned map sends original ids (labels) to the new ids.
        """
        keep = sorted(set(elements))
        _check_ids(self.n, keep)
        emap = ElementMap.from_labels(keep)
        rel = {
            (emap.forward[x], emap.forward[y])
            for x in keep
            for y in keep
            if self.less(x, y)
        }
        return Poset(len(keep), frozenset(rel)), emap

    def remove(self, elements: Iterable[int]) -> tuple["Poset", ElementMap]:
        drop = set(elements)
        _check_ids(self.n, drop)
        return self.induced_subposet(x for x in self.elements if x not in drop)

    # -- text format -----------------------------------------------------

    def to_text(self) -> str:
        lines = [f"poset {self.n}"]
        lines += [f"{x} < {y}" for x, y in self.covers()]
        return "\n".join(lines) + "\n"

    def __str__(self) -> str:
        return f"Poset(n={self.n}, covers={self.covers()})"


def _check_ids(n: int, ids: Iterable[int]) -> None:
    for i in ids:
        if not isinstance(i, int) or not 1 <= i <= n:
            raise IdRangeError(f"element id {i!r} outside 1..{n}")


def build_poset(n: int, relations: Iterable[tuple[int, int]] = ()) -> Poset:
    """Transitive closure of ``relations`` on ``1..n``.

    Raises :class:`CycleError` when the closure relates some element to itself.
    """
    if n < 0:
        raise ParamError("poset size must be non-negative")
    above = [0] * (n + 1)
    for i, j in relations:
        _check_ids(n, (i, j))
        if i == j:
            raise CycleError(f"relation {i} < {i} is reflexive")
        above[i] |= 1 << j
    # Warshall on bit rows
    for k in range(1, n + 1):
        bit = 1 << k
        row_k = above[k]
        for i in range(1, n + 1):
            if above[i] & bit:
                above[i] |= row_k
    for i in range(1, n + 1):
        if above[i] >> i & 1:
            raise CycleError(f"relations force {i} < {i}")
    return Poset(n, frozenset((i, j) for i in range(1, n + 1) for j in bits(above[i])))


def parse_poset(text: str) -> Poset:
    """Read the ``poset <n>`` / ``<i> < <j>`` text format (closure taken on load)."""
    n = None
    relations = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "poset":
                raise ParseError(f"line {lineno}: expected 'poset <n>' header")
            n = _parse_int(parts[1], lineno)
            continue
        if len(parts) != 3 or parts[1] != "<":
            raise ParseError(f"line {lineno}: expected '<i> < <j>', got {line!r}")
        relations.append((_parse_int(parts[0], lineno), _parse_int(parts[2], lineno)))
    if n is None:
        raise ParseError("missing 'poset <n>' header")
    try:
        return build_poset(n, relations)
    except (IdRangeError, CycleError) as exc:
        raise ParseError(str(exc)) from exc


def _parse_int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"line {lineno}: {token!r} is not an integer") from None


# -- generators --------------------------------------------------------------


def chain(n: int) -> tuple[Poset, ElementMap]:
    _require(n >= 1, "chain needs n >= 1")
    return build_poset(n, [(i, i + 1) for i in range(1, n)]), ElementMap.identity(n)


def antichain(n: int) -> tuple[Poset, ElementMap]:
    _require(n >= 1, "antichain needs n >= 1")
    return build_poset(n), ElementMap.identity(n)


def standard_example(n: int) -> tuple[Poset, ElementMap]:
    """S_n: minimal a_1..a_n (ids 1..n), maximal b_1..b_n (ids n+1..2n), a_i < b_j iff i != j."""
    _require(n >= 1, "standard example needs n >= 1")
    labels = [f"a{i}" for i in range(1, n + 1)] + [f"b{i}" for i in range(1, n + 1)]
    rel = [(i, n + j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    return build_poset(2 * n, rel), ElementMap.from_labels(labels)


def _subset_poset(subsets: Sequence[frozenset]) -> tuple[Poset, ElementMap]:
    emap = ElementMap.from_labels(list(subsets))
    rel = [
        (i, j)
        for i, s in enumerate(subsets, start=1)
        for j, t in enumerate(subsets, start=1)
        if s < t
    ]
    return Poset(len(subsets), frozenset(rel)), emap


def boolean_lattice(n: int) -> tuple[Poset, ElementMap]:
    """Subsets of [n] ordered by inclusion; ids follow (size, sorted members)."""
    _require(n >= 1, "boolean lattice needs n >= 1")
    subsets = [frozenset(c) for s in range(n + 1) for c in itertools.combinations(range(1, n + 1), s)]
    return _subset_poset(subsets)


def layers(s: int, t: int, n: int) -> tuple[Poset, ElementMap]:
    """P(s, t; n): the layers of sizes ``s`` and ``t`` of the Boolean lattice on [n]."""
    _require(n >= 1 and 0 <= s < t <= n, "layers need n >= 1 and 0 <= s < t <= n")
    subsets = [frozenset(c) for size in (s, t) for c in itertools.combinations(range(1, n + 1), size)]
    return _subset_poset(subsets)


FAMILIES = {
    "chain": chain,
    "antichain": antichain,
    "standard_example": standard_example,
    "boolean_lattice": boolean_lattice,
    "layers": layers,
}


def generate(family: str, *params: int) -> tuple[Poset, ElementMap]:
    """Dispatch to a named generator, e.g. ``generate("layers", 1, 2, 3)``."""
    try:
        builder = FAMILIES[family.replace("-", "_")]
    except KeyError:
        raise ParamError(f"unknown poset family {family!r}; known: {sorted(FAMILIES)}") from None
    try:
        return builder(*params)
    except TypeError as exc:
        raise ParamError(f"bad parameters for {family}: {exc}") from None


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ParamError(message)


def split(P: Poset) -> tuple[Poset, ElementMap]:
    """Height-two split: x' (id x) below y'' (id n + y) iff x <= y in ``P``."""
    _require(P.n >= 1, "split of an empty poset")
    n = P.n
    labels = [f"{x}'" for x in P.elements] + [f"{x}''" for x in P.elements]
    rel = [(x, n + y) for x in P.elements for y in P.elements if x == y or P.less(x, y)]
    return Poset(2 * n, frozenset(rel)), ElementMap.from_labels(labels)


def product(
    P: Poset, Q: Poset, *, max_elements: int = MAX_PRODUCT_ELEMENTS
) -> tuple[Poset, ElementMap]:
    """Cartesian product; pair ``(p, q)`` gets id ``(p - 1) * |Q| + q``."""
    _require(P.n >= 1 and Q.n >= 1, "product factors must be nonempty")
    if P.n * Q.n > max_elements:
        raise SizeError(f"product would have {P.n * Q.n} elements (cap {max_elements})")
    labels = [(p, q) for p in P.elements for q in Q.elements]
    emap = ElementMap.from_labels(labels)
    rel = []
    for (p1, q1), i in emap.forward.items():
        for (p2, q2), j in emap.forward.items():
            if i != j and (p1 == p2 or P.less(p1, p2)) and (q1 == q2 or Q.less(q1, q2)):
                rel.append((i, j))
    return Poset(len(labels), frozenset(rel)), emap


def random_poset(n: int, p: float, rng) -> Poset:
    """Closure of a random DAG: ``i < j`` proposed with probability ``p`` for ``i < j``."""
    rel = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if rng.random() < p]
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    return build_poset(n, [(perm[i - 1], perm[j - 1]) for i, j in rel])


# -- isomorphism ---------------------------------------------------------------


def _refined_colors(P: Poset) -> list[int]:
    colors = {x: (P.below(x).bit_count(), P.above(x).bit_count()) for x in P.elements}
    while True:
        sig = {
            x: (
                colors[x],
                tuple(sorted(colors[y] for y in bits(P.below(x)))),
                tuple(sorted(colors[y] for y in bits(P.above(x)))),
            )
            for x in P.elements
        }
        ranks = {s: r for r, s in enumerate(sorted(set(sig.values())))}
        refined = {x: ranks[sig[x]] for x in P.elements}
        if len(set(refined.values())) == len(set(colors.values())):
            return [refined[x] for x in P.elements]
        colors = refined


def canonical_form(P: Poset) -> tuple:
    """Isomorphism-invariant key by exhaustive relabelling (``n <= 8`` only).

    Elements are first sorted by a colour refinement, then every relabelling
    compatible with the colour classes is tried and the lexicographically
    least relation vector wins.
    """
    if P.n > MAX_CANONICAL_ELEMENTS:
        raise SizeError(f"canonical form is limited to {MAX_CANONICAL_ELEMENTS} elements")
    colors = _refined_colors(P)
    classes: dict[int, list[int]] = {}
    for x in P.elements:
        classes.setdefault(colors[x - 1], []).append(x)
    groups = [classes[c] for c in sorted(classes)]
    best = None
    for perms in itertools.product(*(itertools.permutations(g) for g in groups)):
        order = [x for block in perms for x in block]
        vec = tuple(P.less(x, y) for x in order for y in order)
        if best is None or vec < best:
            best = vec
    return (P.n, tuple(sorted(colors)), best)


def is_isomorphic(P: Poset, Q: Poset) -> bool:
    if P.n != Q.n or len(P.lt) != len(Q.lt):
        return False
    if P.n <= MAX_CANONICAL_ELEMENTS:
        return canonical_form(P) == canonical_form(Q)
    import networkx as nx

    def digraph(R: Poset):
        g = nx.DiGraph()
        g.add_nodes_from(R.elements)
        g.add_edges_from(R.lt)
        return g

    return nx.is_isomorphic(digraph(P), digraph(Q))


@lru_cache(maxsize=None)
def _posets_up_to_iso(n: int) -> tuple[Poset, ...]:
    if n == 0:
        return (Poset(0, frozenset()),)
    found: dict[tuple, Poset] = {}
    for base in _posets_up_to_iso(n - 1):
        # every n-poset is an (n-1)-poset plus a maximal element over a down-set
        for ideal in _down_sets(base):
            rel = set(base.lt) | {(x, n) for x in bits(ideal)}
            P = Poset(n, frozenset(rel))
            key = canonical_form(P)
            found.setdefault(key, P)
    return tuple(found[k] for k in sorted(found))


def _down_sets(P: Poset) -> Iterator[int]:
    for r in range(P.n + 1):
        for combo in itertools.combinations(P.elements, r):
            mask = to_mask(combo)
            if all(P.below(x) & ~mask == 0 for x in combo):
                yield mask


def posets_up_to_isomorphism(n: int) -> tuple[Poset, ...]:
    """One representative per isomorphism class of ``n``-element posets (n <= 8)."""
    if not 0 <= n <= MAX_CANONICAL_ELEMENTS:
        raise SizeError(f"enumeration supports 0..{MAX_CANONICAL_ELEMENTS} elements")
    return _posets_up_to_iso(n)


def relabel(P: Poset, perm: Mapping[int, int]) -> Poset:
    """Image of ``P`` under the id permutation ``perm``."""
    return Poset(P.n, frozenset((perm[x], perm[y]) for x, y in P.lt))
