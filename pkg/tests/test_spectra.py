from __future__ import annotations

from itertools import combinations, permutations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import complete_signed_graphs, signed_graphs, signed_permutations
from signsym.graph import Graph, GraphError, apply, make_signed_graph, negate, seidel_of_graph, switch
from signsym.spectra import (
    CharPoly,
    bareiss_det,
    bareiss_rank,
    char_poly,
    eigenvalues,
    is_symmetric_spectrum,
    seidel_det,
    seidel_rank,
)


def leibniz_det(m):
    n = len(m)
    total = 0
    for p in permutations(range(n)):
        inversions = sum(p[i] > p[j] for i, j in combinations(range(n), 2))
        term = -1 if inversions % 2 else 1
        for i in range(n):
            term *= m[i][p[i]]
            if not term:
                break
        total += term
    return total


def oracle_charpoly(g) -> list[int]:
    """Coefficients of det(xI - A) by interpolating n+1 Leibniz determinants."""
    n = g.order
    a = g.matrix()
    xs = list(range(n + 1))
    values = [leibniz_det([[(x if i == j else 0) - a[i][j] for j in range(n)] for i in range(n)]) for x in xs]
    v = np.vander(xs, n + 1)
    return [int(round(c)) for c in np.linalg.solve(v.astype(float), np.array(values, dtype=float))]


def test_examples():
    assert char_poly(make_signed_graph(2, [(0, 1, 1)])).coeffs == (0, -1)
    tri = make_signed_graph(3, [(0, 1, 1), (1, 2, 1), (0, 2, -1)])
    assert char_poly(tri).coeffs == (0, -3, 2)
    assert str(char_poly(tri)) == "x^3 - 3x + 2"
    k4 = make_signed_graph(4, [(u, v, -1 if (u, v) == (0, 1) else 1) for u, v in combinations(range(4), 2)])
    assert char_poly(k4).coeffs == (0, -6, 0, 5)
    assert is_symmetric_spectrum(k4)


def test_eigenvalue_examples():
    assert eigenvalues(make_signed_graph(2, [(0, 1, 1)])) == pytest.approx([1, -1], abs=1e-9)
    assert eigenvalues(seidel_of_graph(Graph.empty(4))) == pytest.approx([3, -1, -1, -1], abs=1e-9)
    c5 = Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
    conf = seidel_of_graph(c5.disjoint_union(Graph.empty(1)))
    r5 = 5 ** 0.5
    assert eigenvalues(conf) == pytest.approx([r5] * 3 + [-r5] * 3, abs=1e-9)


def test_seidel_examples():
    assert seidel_det(seidel_of_graph(Graph.empty(4))) == -3
    assert seidel_det(seidel_of_graph(Graph.empty(3))) == 2
    with pytest.raises(GraphError):
        seidel_det(make_signed_graph(3, [(0, 1, 1)]))
    with pytest.raises(GraphError):
        seidel_rank(make_signed_graph(3, [(0, 1, 1)]))


def test_order6_seidel_matrices_nonsingular():
    pairs = list(combinations(range(6), 2))
    for mask in range(0, 1 << 15, 97):
        h = Graph.from_edges(6, [p for i, p in enumerate(pairs) if mask >> i & 1])
        assert seidel_det(seidel_of_graph(h)) != 0


def test_large_coefficients_are_exact():
    # order-12 Seidel matrices overflow nothing: compare against the pure path
    from signsym import _pykernels

    h = Graph.from_edges(12, [(i, j) for i, j in combinations(range(12), 2) if (i * j + i) % 3 == 0])
    g = seidel_of_graph(h)
    flat = [x for row in g.matrix() for x in row]
    assert list(char_poly(g).coeffs) == _pykernels.charpoly(12, flat)[1:]
    big = seidel_of_graph(Graph.from_edges(14, [(i, j) for i, j in combinations(range(14), 2) if (i + j) % 3]))
    assert char_poly(big)(0) == bareiss_det([[-x for x in row] for row in big.matrix()])


@given(signed_graphs(max_order=6))
def test_charpoly_against_leibniz(g):
    assert [1, *char_poly(g).coeffs] == oracle_charpoly(g)


@given(signed_graphs(max_order=6))
def test_bareiss_against_leibniz(g):
    a = g.matrix()
    assert bareiss_det(a) == leibniz_det(a)
    assert bareiss_rank(a) == np.linalg.matrix_rank(np.array(a, dtype=float))


@given(signed_graphs(max_order=8), st.data())
def test_similarity_invariance(g, data):
    cp = char_poly(g)
    x = data.draw(st.sets(st.integers(0, g.order - 1)))
    assert char_poly(switch(g, x)) == cp
    assert char_poly(apply(g, data.draw(signed_permutations(g.order)))) == cp
    assert char_poly(negate(g)) == cp.negated()
    assert cp[1] == 0
    assert cp[2] == -g.size if g.order >= 2 else True


@given(signed_graphs(max_order=9))
def test_exact_and_float_paths_agree(g):
    ev = eigenvalues(g)
    assert sum(ev) == pytest.approx(0, abs=1e-6)
    assert sum(x * x for x in ev) == pytest.approx(2 * g.size, abs=1e-6)
    mirrored = sorted(-x for x in ev)
    float_sym = all(abs(a - b) < 1e-6 for a, b in zip(sorted(ev), mirrored))
    assert float_sym == is_symmetric_spectrum(g)


@given(complete_signed_graphs(max_order=9))
def test_seidel_congruence_and_rank(g):
    n = g.order
    det = seidel_det(g)
    assert (det - (1 - n)) % 4 == 0
    rank = seidel_rank(g)
    if n % 2 == 0:
        assert det % 2 == 1 and rank == n
    else:
        assert rank in (n - 1, n)
        if is_symmetric_spectrum(g):
            assert rank == n - 1


def test_charpoly_helpers():
    cp = CharPoly((0, -3, 2))
    assert cp.order == 3 and cp[0] == 1 and cp(1) == 0
    with pytest.raises(IndexError):
        cp[4]
