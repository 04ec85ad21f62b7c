from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import unsigned_graphs
from signsym.canon import canonical_code, graph_certificate, isomorphic_graphs
from signsym.constructions import (
    FFamilySpec,
    construct_f_family,
    construct_gamma_s,
    construct_gamma_st,
    construct_gc_split,
    construct_join_signed,
    construct_selfcomp,
    f_spec_after_switch,
    is_conference,
    named_instance,
    paley_conference,
    paley_graph,
    random_f_spec,
    self_complementary_graphs,
)
from signsym.fields import GF, prime_power
from signsym.generation import graphs
from signsym.graph import (
    Graph,
    GraphError,
    SignedPermutation,
    apply,
    make_signed_graph,
    negate,
    seidel_of_graph,
    switch,
)
from signsym.spectra import char_poly, eigenvalues, is_symmetric_spectrum
from signsym.symcheck import is_sign_symmetric

P4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])


def test_f_family_examples():
    k2 = construct_f_family(FFamilySpec.of([[0]], [[1]]))
    assert k2.signed_edges() == [(0, 1, 1)]
    g = construct_f_family(FFamilySpec.of([[0, 1], [1, 0]], [[0, 0], [0, 0]]))
    assert g.signed_edges() == [(0, 1, 1), (2, 3, -1)]
    with pytest.raises(GraphError):
        FFamilySpec.of([[0, 1], [0, 0]], [[0, 0], [0, 0]])
    with pytest.raises(GraphError):
        FFamilySpec.of([[1]], [[0]])


@given(st.integers(1, 4), st.randoms(use_true_random=False))
def test_f_family_sign_symmetric_and_closed(k, rng):
    spec = random_f_spec(rng, k)
    g = construct_f_family(spec)
    ok, w = is_sign_symmetric(g)
    assert ok and w.certifies(g, negate(g))
    v = rng.randrange(2 * k)
    rebuilt, perm = f_spec_after_switch(spec, v)
    switched = switch(g, [v])
    assert apply(switched, SignedPermutation.plain(perm)) == construct_f_family(rebuilt)
    assert canonical_code(switched) == canonical_code(construct_f_family(rebuilt))


@given(st.integers(1, 4), st.randoms(use_true_random=False))
def test_f_family_closed_under_any_switching(k, rng):
    spec = random_f_spec(rng, k)
    g = construct_f_family(spec)
    x = [v for v in range(2 * k) if rng.random() < 0.5]
    label = list(range(2 * k))  # original vertex -> current label
    for v in x:
        spec, perm = f_spec_after_switch(spec, label[v])
        label = [perm[u] for u in label]
    assert apply(switch(g, x), SignedPermutation.plain(label)) == construct_f_family(spec)


def test_gc_split_examples():
    one_edge = construct_gc_split(Graph.from_edges(2, [(0, 1)]))
    assert char_poly(one_edge).coeffs == (0, -6, 0, 5)
    assert sorted(round(x * x, 9) for x in eigenvalues(one_edge)) == [1, 1, 5, 5]
    empty = construct_gc_split(Graph.empty(2))
    assert [(u, v) for u, v, s in empty.signed_edges() if s < 0] == [(2, 3)]
    assert canonical_code(one_edge) == canonical_code(empty)


@given(unsigned_graphs(max_order=4))
def test_gc_split_symmetric_spectrum(h):
    assert is_symmetric_spectrum(construct_gc_split(h))


def test_selfcomp_examples():
    cone = construct_selfcomp("cone", P4)
    assert cone.order == 5 and is_sign_symmetric(cone)[0]
    assert is_sign_symmetric(construct_selfcomp("union", P4, P4))[0]
    with pytest.raises(GraphError):
        construct_selfcomp("cone", Graph.from_edges(3, [(0, 1)]))
    with pytest.raises(GraphError):
        construct_selfcomp("join", P4)
    with pytest.raises(GraphError):
        construct_selfcomp("twist", P4, P4)


@pytest.mark.parametrize("mode", ["join", "union"])
def test_selfcomp_pairs_sign_symmetric(mode):
    sc = self_complementary_graphs(4) + self_complementary_graphs(5)
    for g in sc:
        for h in sc:
            assert is_sign_symmetric(construct_selfcomp(mode, g, h))[0]


@pytest.mark.parametrize("m, count", [(0, 1), (1, 1), (2, 0), (3, 0), (4, 1), (5, 2), (8, 10), (9, 36)])
def test_self_complementary_counts(m, count):
    found = self_complementary_graphs(m)
    assert len(found) == count
    for g in found:
        perm = isomorphic_graphs(g, g.complement())
        assert perm is not None and g.relabel(perm) == g.complement()


@pytest.mark.parametrize("m", range(1, 8))
def test_self_complementary_against_filtering(m):
    brute = {graph_certificate(g) for g in graphs(m) if isomorphic_graphs(g, g.complement()) is not None}
    assert {graph_certificate(g) for g in self_complementary_graphs(m)} == brute


def test_self_complementary_cap():
    with pytest.raises(GraphError):
        self_complementary_graphs(10)


def test_join_signed():
    single = make_signed_graph(1, [])
    k2 = construct_join_signed(single, single)
    assert k2.signed_edges() == [(0, 1, 1)] and is_sign_symmetric(k2)[0]
    with pytest.raises(GraphError):
        construct_join_signed(make_signed_graph(2, [(0, 1, 1)]), make_signed_graph(2, [(0, 1, 1)]))
    sp4 = seidel_of_graph(P4)
    joined = construct_join_signed(sp4, sp4)
    assert joined.order == 8
    ok, w = is_sign_symmetric(joined)
    assert ok and w.certifies(joined, negate(joined))


def test_gamma_families():
    for s in range(4):
        g = construct_gamma_s(s)
        cp = char_poly(g)
        assert g.order == 6 + s and g.size == 8 + 2 * s
        assert all(cp[i] == 0 for i in range(1, g.order + 1, 2))
        assert not is_sign_symmetric(g)[0]
    for s, t in [(0, 1), (1, 1), (2, 1), (1, 2)]:
        g = construct_gamma_st(s, t)
        assert g.order == 6 + 2 * (s + t)
        assert is_symmetric_spectrum(g) and not is_sign_symmetric(g)[0]
    with pytest.raises(GraphError):
        construct_gamma_s(-1)
    with pytest.raises(GraphError):
        construct_gamma_st(1, 0)


@pytest.mark.parametrize("q", [5, 9, 13, 17, 25])
def test_paley(q):
    g = paley_conference(q)
    assert g.order == q + 1 and g.is_complete()
    assert is_conference(g)
    assert is_symmetric_spectrum(g)
    assert eigenvalues(g) == pytest.approx([q ** 0.5] * ((q + 1) // 2) + [-(q ** 0.5)] * ((q + 1) // 2), abs=1e-9)
    h = paley_graph(q)
    assert all(h.degree(v) == (q - 1) // 2 for v in range(q))


@pytest.mark.parametrize("q", [5, 9, 13])
def test_paley_sign_symmetric(q):
    ok, w = is_sign_symmetric(paley_conference(q))
    assert ok and w.certifies(paley_conference(q), negate(paley_conference(q)))


@pytest.mark.parametrize("q", [3, 7, 15, 1, 1025 + 4])
def test_paley_rejects(q):
    with pytest.raises(GraphError):
        paley_conference(q)


def test_finite_fields():
    assert prime_power(9) == (3, 2) and prime_power(12) is None and prime_power(1) is None
    f = GF(9)
    for a in range(9):
        assert f.add(a, f.sub(0, a)) == 0
        for b in range(9):
            assert f.mul(a, b) == f.mul(b, a)
    # the nonzero elements form a group: every element has an inverse
    assert all(any(f.mul(a, b) == 1 for b in range(1, 9)) for a in range(1, 9))
    assert len(f.nonzero_squares()) == 4
    with pytest.raises(ValueError):
        GF(6)


def test_named_instances():
    e8 = named_instance("excep8")
    assert e8.order == 8 and e8.is_complete()
    assert is_symmetric_spectrum(e8) and not is_sign_symmetric(e8)[0]
    e9 = named_instance("excep9")
    assert e9.order == 9 and e9.negative_graph().size == 10
    assert is_symmetric_spectrum(e9)
    ns = named_instance("non-sign")
    assert ns.order == 6 and ns.size == 8
    with pytest.raises(GraphError):
        named_instance("nope")


@pytest.mark.parametrize("m, count", [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156), (7, 1044)])
def test_generation_counts(m, count):
    found = graphs(m)
    assert len(found) == count
    assert len({graph_certificate(g) for g in found}) == count


def test_generation_covers_all_labelled_graphs():
    for m in range(1, 6):
        pairs = list(combinations(range(m), 2))
        certs = {
            graph_certificate(Graph.from_edges(m, [p for i, p in enumerate(pairs) if mask >> i & 1]))
            for mask in range(1 << len(pairs))
        }
        assert certs == {graph_certificate(g) for g in graphs(m)}
