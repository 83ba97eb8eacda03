from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings

from localdim.errors import CycleError, IdRangeError, ParamError, ParseError, SizeError
from localdim.poset import (
    Poset,
    antichain,
    boolean_lattice,
    build_poset,
    canonical_form,
    chain,
    generate,
    is_isomorphic,
    layers,
    parse_poset,
    posets_up_to_isomorphism,
    product,
    relabel,
    split,
    standard_example,
)

from .oracles import POSET_CLASS_COUNTS, all_linear_extensions
from .strategies import posets


def test_build_poset_takes_transitive_closure():
    P = build_poset(4, [(1, 2), (2, 3), (3, 4)])
    assert P.less(1, 4)
    assert P.comparable_pairs() == sorted(itertools.combinations(range(1, 5), 2))


def test_build_poset_rejects_cycles_and_bad_ids():
    with pytest.raises(CycleError):
        build_poset(3, [(1, 2), (2, 3), (3, 1)])
    with pytest.raises(CycleError):
        build_poset(2, [(1, 1)])
    with pytest.raises(IdRangeError):
        build_poset(2, [(1, 3)])


def test_constructor_requires_closed_relation():
    with pytest.raises(ParamError):
        Poset(3, frozenset({(1, 2), (2, 3)}))


def test_parse_roundtrip_and_comments():
    text = "# a comment\nposet 3\n1 < 2\n\n2 < 3\n"
    P = parse_poset(text)
    assert P.less(1, 3)
    assert parse_poset(P.to_text()) == P


@pytest.mark.parametrize("text", ["", "poset x\n", "poset 2\n1 > 2\n", "poset 2\n1 < 3\n",
                                  "poset 2\n1 < 2\n2 < 1\n", "graph 2\n"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_poset(text)


def test_standard_example_shape():
    P, emap = standard_example(3)
    assert P.n == 6
    assert emap.label_of(1) == "a1" and emap.label_of(4) == "b1"
    assert P.incomparable(1, 4) and P.less(1, 5)
    assert P.height() == 2


def test_boolean_lattice_and_layers():
    B, emap = boolean_lattice(3)
    assert B.n == 8 and B.height() == 4
    assert emap.label_of(1) == frozenset() and emap.label_of(8) == frozenset({1, 2, 3})
    L, lmap = layers(1, 2, 3)
    assert L.n == 6
    assert all(lmap.label_of(x) < lmap.label_of(y) for x, y in L.lt)


def test_generate_dispatch_and_errors():
    assert generate("standard-example", 2)[0].n == 4
    with pytest.raises(ParamError):
        generate("nope", 1)
    with pytest.raises(ParamError):
        generate("chain")
    with pytest.raises(ParamError):
        chain(0)
    with pytest.raises(ParamError):
        layers(2, 1, 3)


def test_split_relation():
    P, _ = chain(2)
    Q, qmap = split(P)
    assert Q.n == 4
    assert qmap.label_of(1) == "1'" and qmap.label_of(3) == "1''"
    assert Q.less(1, 3) and Q.less(1, 4) and Q.less(2, 4) and not Q.less(2, 3)


def test_product_ids_and_cap():
    P, _ = chain(2)
    Q, _ = antichain(2)
    PQ, emap = product(P, Q)
    assert emap.id_of((2, 1)) == 3
    assert PQ.less(emap.id_of((1, 1)), emap.id_of((2, 1)))
    assert PQ.incomparable(emap.id_of((1, 1)), emap.id_of((2, 2)))
    with pytest.raises(SizeError):
        product(P, Q, max_elements=3)


def test_linear_extensions_match_brute_force():
    B, _ = boolean_lattice(3)
    assert list(B.linear_extensions()) == all_linear_extensions(B.n, B.lt)
    assert B.linear_extension() == min(all_linear_extensions(B.n, B.lt))


def test_induced_subposet_and_remove():
    P, _ = chain(4)
    R, rmap = P.remove([2])
    assert R.n == 3
    assert rmap.backward == {1: 1, 2: 3, 3: 4}
    assert R.less(1, 3)


def test_isomorphism_class_counts():
    assert tuple(len(posets_up_to_isomorphism(n)) for n in range(7)) == POSET_CLASS_COUNTS


def test_isomorphism_large_uses_graph_matcher():
    B, _ = boolean_lattice(4)
    perm = {x: B.n + 1 - x for x in B.elements}
    dual = Poset(B.n, frozenset((perm[y], perm[x]) for x, y in B.lt))
    assert is_isomorphic(B, dual)
    S, _ = standard_example(5)
    assert not is_isomorphic(S, product(chain(2)[0], antichain(5)[0])[0])


@settings(max_examples=60, deadline=None)
@given(posets(max_n=6))
def test_canonical_form_is_relabelling_invariant(P):
    perm = dict(zip(P.elements, reversed(P.elements)))
    assert canonical_form(relabel(P, perm)) == canonical_form(P)


@settings(max_examples=60, deadline=None)
@given(posets(max_n=7))
def test_text_roundtrip(P):
    assert parse_poset(P.to_text()) == P


@settings(max_examples=60, deadline=None)
@given(posets(max_n=7))
def test_height_matches_longest_chain(P):
    C = P.longest_chain()
    assert len(C) == P.height()
    assert all(P.less(x, y) for x, y in zip(C, C[1:]))
