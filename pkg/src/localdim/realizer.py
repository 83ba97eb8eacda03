"""Partial linear extensions, local realizers and their verifiers.

Every construction and solver in the package hands its output to
:func:`verify_local_realizer` (or :func:`verify_realizer`); those two
functions are the certificate checkers the rest of the code is judged by.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

from .errors import IdRangeError, ParseError, VerificationError
from .poset import Poset, bits

COMPARABILITY_UNWITNESSED = "comparability-unwitnessed"
INCOMPARABILITY_UNREVERSED = "incomparability-unreversed"
NOT_A_PLE = "not-a-ple"


@dataclass(frozen=True)
class Ple:
    """A linear order on a subset of the ground set, least element first."""

    order: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "order", tuple(self.order))
        if not self.order:
            raise ValueError("a ple must contain at least one element")
        if len(set(self.order)) != len(self.order):
            raise ValueError(f"ple {self.order} repeats an element")

    def __len__(self) -> int:
        return len(self.order)

    def __iter__(self):
        return iter(self.order)

    def __contains__(self, x: int) -> bool:
        return x in self.order

    @property
    def ground(self) -> frozenset[int]:
        return frozenset(self.order)

    def first_violation(self, P: Poset) -> tuple[int, int] | None:
        """First pair ``(x, y)`` listed as x-before-y although ``y < x`` in ``P``."""
        for i, x in enumerate(self.order):
            for y in self.order[i + 1 :]:
                if P.less(y, x):
                    return (x, y)
        return None

    def is_ple_of(self, P: Poset) -> bool:
        return self.first_violation(P) is None


PleLike = Union[Ple, Sequence[int]]


def as_ple(p: PleLike) -> Ple:
    return p if isinstance(p, Ple) else Ple(tuple(p))


@dataclass(frozen=True)
class LocalRealizer:
    """Nonempty family of ple's; ``freq`` counts, per element, the ple's containing it."""

    ples: tuple[Ple, ...]
    freq: Counter = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        ples = tuple(as_ple(p) for p in self.ples)
        if not ples:
            raise ValueError("a local realizer must contain at least one ple")
        object.__setattr__(self, "ples", ples)
        object.__setattr__(self, "freq", Counter(x for p in ples for x in p))

    @classmethod
    def of(cls, ples: Iterable[PleLike]) -> "LocalRealizer":
        return cls(tuple(as_ple(p) for p in ples))

    @property
    def mu(self) -> int:
        return max(self.freq.values(), default=0)

    def __len__(self) -> int:
        return len(self.ples)

    def __iter__(self):
        return iter(self.ples)

    def relabel(self, mapping) -> "LocalRealizer":
        """Apply an id translation (dict or callable) to every ple."""
        f = mapping if callable(mapping) else mapping.__getitem__
        return LocalRealizer(tuple(Ple(tuple(f(x) for x in p)) for p in self.ples))


@dataclass(frozen=True)
class Violation:
    kind: str
    pair: tuple[int, int] | None = None
    ple_index: int | None = None
    detail: str = ""

    def __str__(self) -> str:
        where = f" in ple #{self.ple_index}" if self.ple_index is not None else ""
        pair = f" {self.pair}" if self.pair is not None else ""
        extra = f": {self.detail}" if self.detail else ""
        return f"{self.kind}{pair}{where}{extra}"


@dataclass(frozen=True)
class RealizerReport:
    ok: bool
    violation: Violation | None = None
    mu: int = 0
    freq: dict[int, int] = field(default_factory=dict)
    total: int = 0

    def __bool__(self) -> bool:
        return self.ok

    def raise_for_violation(self) -> "RealizerReport":
        if not self.ok:
            raise VerificationError(self.violation)
        return self


def _check_ids(P: Poset, ples: Sequence[Ple]) -> None:
    for p in ples:
        for x in p:
            if not 1 <= x <= P.n:
                raise IdRangeError(f"ple element {x} outside 1..{P.n}")


def _after_masks(P: Poset, ples: Sequence[Ple]) -> list[int]:
    """``after[u]``: elements placed after ``u`` in at least one ple."""
    after = [0] * (P.n + 1)
    for p in ples:
        suffix = 0
        for x in reversed(p.order):
            after[x] |= suffix
            suffix |= 1 << x
    return after


def _first_unmet(P: Poset, after: list[int]) -> Violation | None:
    for u in P.elements:
        missing = (P.above(u) | P.incomparable_to(u)) & ~after[u]
        if missing:
            v = next(bits(missing))
            kind = COMPARABILITY_UNWITNESSED if P.less(u, v) else INCOMPARABILITY_UNREVERSED
            return Violation(kind, (u, v))
    return None


def verify_local_realizer(P: Poset, R: LocalRealizer | Iterable[PleLike]) -> RealizerReport:
    """Check that ``R`` is a local realizer of ``P``.

    The scan order is fixed: ple's by index first (a ple listing some
    ``x`` before ``y`` with ``y < x`` is reported as not-a-ple), then ordered
    pairs ``(u, v)`` lexicographically, where ``(u, v)`` needs ``u`` before
    ``v`` in some ple whenever ``u < v`` or ``u`` and ``v`` are incomparable.
    """
    if not isinstance(R, LocalRealizer):
        R = LocalRealizer.of(R)
    _check_ids(P, R.ples)
    for idx, p in enumerate(R.ples):
        bad = p.first_violation(P)
        if bad is not None:
            return RealizerReport(False, Violation(NOT_A_PLE, bad, idx, "order contradicts the poset"))
    violation = _first_unmet(P, _after_masks(P, R.ples))
    if violation is not None:
        return RealizerReport(False, violation)
    mu, freq, total = mu_stats(R)
    return RealizerReport(True, None, mu, freq, total)


def verify_realizer(P: Poset, family: Iterable[PleLike]) -> RealizerReport:
    """Check that ``family`` is a (Dushnik-Miller) realizer: full linear extensions
    whose intersection is ``P``."""
    ples = tuple(as_ple(p) for p in family)
    if not ples:
        return RealizerReport(False, Violation(NOT_A_PLE, detail="empty family"))
    _check_ids(P, ples)
    everything = frozenset(P.elements)
    for idx, p in enumerate(ples):
        if p.ground != everything:
            return RealizerReport(
                False, Violation(NOT_A_PLE, None, idx, "not a full linear extension")
            )
        bad = p.first_violation(P)
        if bad is not None:
            return RealizerReport(False, Violation(NOT_A_PLE, bad, idx, "order contradicts the poset"))
    violation = _first_unmet(P, _after_masks(P, ples))
    if violation is not None:
        return RealizerReport(False, violation)
    k = len(ples)
    return RealizerReport(True, None, k, {x: k for x in P.elements}, k * P.n)


def mu_stats(R: LocalRealizer | Iterable[PleLike]) -> tuple[int, dict[int, int], int]:
    """(maximum frequency, per-element frequency, total number of ple entries)."""
    if not isinstance(R, LocalRealizer):
        R = LocalRealizer.of(R)
    freq = dict(sorted(R.freq.items()))
    return R.mu, freq, sum(freq.values())


# -- text format ---------------------------------------------------------------


def parse_realizer(text: str) -> LocalRealizer:
    """Read ``ple: i1 i2 ... ik`` lines (least element first)."""
    ples = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, sep, rest = line.partition(":")
        if not sep or head.strip() != "ple":
            raise ParseError(f"line {lineno}: expected 'ple: <i1> ... <ik>'")
        try:
            order = tuple(int(tok) for tok in rest.split())
            ples.append(Ple(order))
        except ValueError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
    if not ples:
        raise ParseError("realizer file contains no ple")
    return LocalRealizer(tuple(ples))


def format_realizer(R: LocalRealizer | Iterable[PleLike]) -> str:
    ples = R.ples if isinstance(R, LocalRealizer) else [as_ple(p) for p in R]
    return "".join("ple: " + " ".join(map(str, p.order)) + "\n" for p in ples)
