"""Hypothesis strategies shared by the property tests."""

from __future__ import annotations

import random

from hypothesis import strategies as st

from localdim.diffgraph import BipartiteGraph, DifferenceGraph
from localdim.poset import build_poset


@st.composite
def posets(draw, min_n: int = 1, max_n: int = 6):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    perm = draw(st.permutations(range(1, n + 1)))
    return build_poset(n, [(perm[i - 1], perm[j - 1]) for i, j in chosen])


@st.composite
def height2_posets(draw, max_side: int = 5):
    from localdim.diffgraph import poset_from_bipartite

    return poset_from_bipartite(draw(bipartite_graphs(max_side=max_side, min_side=1)))


@st.composite
def bipartite_graphs(draw, max_side: int = 4, min_side: int = 0, max_edges: int | None = None):
    a = draw(st.integers(min_side, max_side))
    b = draw(st.integers(min_side, max_side))
    cells = [(r, c) for r in range(1, a + 1) for c in range(1, b + 1)]
    edges = draw(st.lists(st.sampled_from(cells), unique=True, max_size=max_edges) if cells else st.just([]))
    return BipartiteGraph(a, b, frozenset(edges))


partitions = st.lists(st.integers(1, 8), min_size=1, max_size=8).map(
    lambda xs: DifferenceGraph(tuple(sorted(xs, reverse=True)))
)

seeded_rngs = st.integers(0, 2**32 - 1).map(random.Random)
