from __future__ import annotations

import random
from itertools import combinations, permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import signed_graphs
from signsym.census import (
    MAX_ELEMENTARY_ORDER,
    cycle_census,
    elementary_coefficients,
    elementary_pieces,
    odd_cycle_balanced,
    simple_cycles,
)
from signsym.constructions import construct_gamma_s, named_instance
from signsym.graph import GraphError, cycle_sign, make_signed_graph, negate, switch
from signsym.spectra import char_poly
from signsym.symcheck import is_sign_symmetric

NEG_TRIANGLE = make_signed_graph(3, [(0, 1, 1), (1, 2, 1), (0, 2, -1)])


def brute_cycles(g):
    """Every cycle as a frozenset of edges, from all vertex sequences."""
    found = set()
    for k in range(3, g.order + 1):
        for vs in combinations(range(g.order), k):
            for rest in permutations(vs[1:]):
                cyc = (vs[0], *rest)
                if all(g.has_edge(cyc[i], cyc[(i + 1) % k]) for i in range(k)):
                    found.add(frozenset(frozenset((cyc[i], cyc[(i + 1) % k])) for i in range(k)))
    return found


def test_examples():
    c = cycle_census(NEG_TRIANGLE)
    assert (c.c_plus(3), c.c_minus(3)) == (0, 1)
    for s in range(4):
        c5 = cycle_census(construct_gamma_s(s), 5)
        assert (c5.c_plus(5), c5.c_minus(5)) == (s + 1, s)
    c7 = cycle_census(named_instance("excep9"), 7)
    assert c7.c_plus(7) != c7.c_minus(7)
    assert odd_cycle_balanced(named_instance("excep8"), 7)
    assert not odd_cycle_balanced(construct_gamma_s(2))
    with pytest.raises(GraphError):
        cycle_census(NEG_TRIANGLE, 4)


def test_elementary_examples():
    assert elementary_coefficients(make_signed_graph(2, [(0, 1, 1)])).coeffs == (0, -1)
    assert elementary_coefficients(NEG_TRIANGLE).coeffs == (0, -3, 2)
    assert elementary_coefficients(construct_gamma_s(0))[5] == 0
    pieces = list(elementary_pieces(NEG_TRIANGLE))
    assert any(p.vertex_count == 3 and p.sign_product == -1 and p.term() == 2 for p in pieces)
    with pytest.raises(GraphError):
        elementary_coefficients(make_signed_graph(MAX_ELEMENTARY_ORDER + 1, []))


@given(signed_graphs(max_order=7))
def test_simple_cycles_match_brute_force(g):
    produced = [frozenset(frozenset((c[i], c[(i + 1) % len(c)])) for i in range(len(c))) for c in simple_cycles(g.adj)]
    assert len(produced) == len(set(produced))
    assert set(produced) == brute_cycles(g)


@given(signed_graphs(max_order=7))
def test_census_totals_and_a3(g):
    c = cycle_census(g)
    by_length = {}
    for cyc in simple_cycles(g.adj):
        sign = cycle_sign(g, cyc)
        plus, minus = by_length.get(len(cyc), (0, 0))
        by_length[len(cyc)] = (plus + (sign > 0), minus + (sign < 0))
    for length in range(3, g.order + 1):
        assert (c.c_plus(length), c.c_minus(length)) == by_length.get(length, (0, 0))
    if g.order >= 3:
        assert char_poly(g)[3] == 2 * (c.c_minus(3) - c.c_plus(3))


@given(signed_graphs(max_order=7), st.data())
def test_census_switching_and_negation(g, data):
    x = data.draw(st.sets(st.integers(0, g.order - 1)))
    c = cycle_census(g)
    assert cycle_census(switch(g, x)) == c
    n = cycle_census(negate(g))
    for length in range(3, g.order + 1):
        if length % 2:
            assert (n.c_plus(length), n.c_minus(length)) == (c.c_minus(length), c.c_plus(length))
        else:
            assert (n.c_plus(length), n.c_minus(length)) == (c.c_plus(length), c.c_minus(length))


@given(signed_graphs(max_order=7))
def test_elementary_matches_charpoly(g):
    assert elementary_coefficients(g) == char_poly(g)


def test_elementary_matches_charpoly_random_larger():
    rng = random.Random(7)
    for _ in range(40):
        n = rng.randint(8, 9)
        g = make_signed_graph(
            n, [(u, v, rng.choice((1, -1))) for u, v in combinations(range(n), 2) if rng.random() < 0.4]
        )
        assert elementary_coefficients(g) == char_poly(g)


@given(signed_graphs(max_order=7))
def test_sign_symmetric_implies_balanced(g):
    if is_sign_symmetric(g)[0]:
        assert odd_cycle_balanced(g)
