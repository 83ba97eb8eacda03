from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from localdim.diffgraph import (
    BICLIQUE,
    DIFFERENCE,
    BipartiteGraph,
    DifferenceGraph,
    Member,
    count_partitions,
    critical_pair_graph,
    edge_multiplicities,
    enumerate_difference_graphs,
    format_cover,
    from_partition,
    height2_classes,
    is_nested,
    parse_bigraph,
    parse_cover,
    ple_to_difference_graph,
    poset_from_bipartite,
    random_bipartite,
    staircase,
    to_partition,
    transpose,
    verify_cover,
)
from localdim.errors import (
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
from localdim.poset import boolean_lattice, standard_example

from .oracles import partitions as oracle_partitions
from .strategies import bipartite_graphs, height2_posets, partitions


def test_difference_graph_from_partition():
    H = from_partition((3, 1))
    assert (H.a, H.b, H.num_edges) == (2, 3, 4)
    assert H.edges() == {(1, 1), (1, 2), (1, 3), (2, 1)}
    assert to_partition(H) == (3, 1)


@pytest.mark.parametrize("bad", [(), (1, 2), (2, 0), (0,)])
def test_partition_validation(bad):
    with pytest.raises(PartitionError):
        DifferenceGraph(bad)


def test_transpose_is_conjugate_partition():
    assert transpose(DifferenceGraph((3, 1))).f == (2, 1, 1)
    assert transpose(staircase(4)).f == staircase(4).f


@settings(max_examples=100, deadline=None)
@given(partitions)
def test_transpose_is_an_involution_preserving_edges(H):
    T = transpose(H)
    assert transpose(T) == H
    assert T.num_edges == H.num_edges
    assert {(c, r) for r, c in H.edges()} == T.edges()


def test_count_partitions_guards():
    assert count_partitions(0) == 1
    with pytest.raises(ParamError):
        count_partitions(-1)
    with pytest.raises(ParamError):
        count_partitions(10_001)
    assert count_partitions(100) == 190569292


@pytest.mark.parametrize("m", range(1, 10))
def test_enumeration_matches_oracle(m):
    assert sorted(H.f for H in enumerate_difference_graphs(m)) == sorted(oracle_partitions(m))


def test_is_nested():
    assert is_nested({(1, 1), (1, 2), (2, 1)})
    assert not is_nested({(1, 1), (2, 2)})


def test_member_shapes():
    assert Member.rect([2, 1], [3]).rows == (1, 2)
    m = Member.from_edges({(1, 1), (1, 2), (2, 1)})
    assert m.f == (2, 1) and m.shape == "diff"
    assert Member((1,), ()).shape_problem() == "member has an empty side"
    assert Member((1, 2), (1, 2), (1, 2)).shape_problem() == "first row must see every column"
    assert Member((1, 2), (1, 2), (2, 2)).is_biclique()


def test_verify_cover_kinds_and_violations():
    G = staircase(2).to_bipartite()  # edges (1,1) (1,2) (2,1)
    diff = [Member.from_edges(G.edges)]
    assert verify_cover(G, diff, DIFFERENCE).max_multiplicity == 1
    report = verify_cover(G, diff, BICLIQUE)
    assert report.violation.kind == "shape"
    with pytest.raises(ShapeError):
        report.raise_for_violation()
    missing = verify_cover(G, [Member.rect([1], [1, 2])])
    assert missing.violation.kind == "uncovered-edge" and missing.violation.edge == (2, 1)
    with pytest.raises(UncoveredEdge):
        missing.raise_for_violation()
    foreign = verify_cover(G, [Member.rect([1, 2], [1, 2])])
    assert foreign.violation.edge == (2, 2)
    with pytest.raises(ForeignEdge):
        foreign.raise_for_violation()
    with pytest.raises(IdRangeError):
        verify_cover(G, [Member.rect([3], [1])])


def test_cover_report_statistics():
    G = staircase(3).to_bipartite()
    rects = [Member.rect([1, 2, 3], [1]), Member.rect([1], [2, 3]), Member.rect([2], [2])]
    rep = verify_cover(G, rects, BICLIQUE)
    assert (rep.row_max, rep.col_max, rep.max_multiplicity, rep.total_vertices) == (2, 2, 2, 9)
    assert edge_multiplicities(rects)[(1, 1)] == 1


def test_critical_pair_graph_of_standard_example():
    P, _ = standard_example(3)
    G = critical_pair_graph(P)
    assert G.edges == {(1, 1), (2, 2), (3, 3)}
    assert G.row_labels == (1, 2, 3) and G.col_labels == (4, 5, 6)
    with pytest.raises(HeightError):
        height2_classes(boolean_lattice(3)[0])


def test_isolated_columns_become_minimal():
    # a column adjacent to every row turns into an isolated element, so it
    # lands on the minimal side: the graph-to-poset roundtrip needs no such column
    K = BipartiteGraph(2, 2, {(1, 1), (1, 2), (2, 1), (2, 2)})
    P = poset_from_bipartite(K)
    assert P.is_antichain()
    assert critical_pair_graph(P).b == 0


@settings(max_examples=100, deadline=None)
@given(bipartite_graphs(max_side=5, min_side=1))
def test_graph_poset_roundtrip(G):
    full_cols = {c for c in range(1, G.b + 1) if all((r, c) in G.edges for r in range(1, G.a + 1))}
    if full_cols:
        return
    H = critical_pair_graph(poset_from_bipartite(G))
    assert (H.a, H.b, H.edges) == (G.a, G.b, G.edges)


@settings(max_examples=100, deadline=None)
@given(height2_posets(max_side=4), st.data())
def test_ple_difference_graph_is_nested_and_reversed(P, data):
    order = list(data.draw(st.permutations(list(P.elements))))
    # sort into a valid ple of the whole poset, keeping the drawn order among incomparables
    L = []
    rest = order[:]
    while rest:
        x = next(y for y in rest if not any(P.less(z, y) for z in rest))
        L.append(x)
        rest.remove(x)
    m = ple_to_difference_graph(P, L)
    G = critical_pair_graph(P)
    if m is None:
        return
    assert m.shape_problem() is None
    assert m.edges() <= G.edges
    pos = {x: i for i, x in enumerate(L)}
    for r, c in m.edges():
        assert pos[G.col_labels[c - 1]] < pos[G.row_labels[r - 1]]


def test_ple_to_difference_graph_rejects_non_ple():
    P, _ = standard_example(2)
    with pytest.raises(NotPleError):
        ple_to_difference_graph(P, (3, 2))  # b1 before a2 although a2 < b1


def test_random_bipartite_is_seeded():
    G1 = random_bipartite(5, 6, 0.4, 123)
    assert G1 == random_bipartite(5, 6, 0.4, 123)
    assert random_bipartite(3, 3, 1.0, 0).edges == {(r, c) for r in (1, 2, 3) for c in (1, 2, 3)}
    assert not random_bipartite(3, 3, 0.0, 0).edges
    with pytest.raises(ParamError):
        random_bipartite(2, 2, 1.5, 0)


def test_bigraph_and_cover_text_formats():
    G = random_bipartite(4, 4, 0.5, 9)
    assert parse_bigraph(G.to_text()) == G
    members = [Member.rect([1, 2], [3]), Member((1, 2), (4, 1), (2, 1))]
    assert parse_cover(format_cover(members)) == members
    for bad in ("bigraph 1\n", "bigraph 1 1\n1 2\n", "1 1\n", "bigraph 1 1\n1 x\n"):
        with pytest.raises(ParseError):
            parse_bigraph(bad)
    for bad in ("rect: 1\n", "box: 1 | 2\n", "diff: 1 | 2\n", "rect: a | 1\n"):
        with pytest.raises(ParseError):
            parse_cover(bad)
