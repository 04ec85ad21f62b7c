"""Constructions of sign-symmetric graphs and of the named exceptional graphs.

Vertex labels are 0-based.  Where a graph is usually drawn with labels
``1..6`` (the hexagon cores of ``gamma_s`` / ``gamma_st`` and the 6-vertex
``non-sign`` instance) label ``i`` becomes vertex ``i - 1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .canon import graph_certificate, isomorphic_graphs
from .fields import field, prime_power
from .graph import (
    Graph,
    GraphError,
    SignedGraph,
    from_matrix,
    make_signed_graph,
    negate,
    seidel_of_graph,
)
from .symcheck import signed_isomorphism

Matrix = Sequence[Sequence[int]]


@dataclass(frozen=True)
class FFamilySpec:
    """Blocks of the adjacency matrix ``[[B, C], [C, -B]]`` on ``2k`` vertices.

    The diagonal of ``C`` gives the edges ``i -- k+i``.
    """

    k: int
    B: tuple[tuple[int, ...], ...]
    C: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for name, m in (("B", self.B), ("C", self.C)):
            if len(m) != self.k or any(len(row) != self.k for row in m):
                raise GraphError(f"{name} must be {self.k}x{self.k}")
            for i in range(self.k):
                for j in range(self.k):
                    if m[i][j] not in (-1, 0, 1):
                        raise GraphError(f"{name} entries must lie in {{-1, 0, 1}}")
                    if m[i][j] != m[j][i]:
                        raise GraphError(f"{name} is not symmetric at ({i}, {j})")
        if any(self.B[i][i] for i in range(self.k)):
            raise GraphError("B must have a zero diagonal")

    @classmethod
    def of(cls, B: Matrix, C: Matrix) -> FFamilySpec:
        return cls(len(B), tuple(map(tuple, B)), tuple(map(tuple, C)))

    def matrix(self) -> list[list[int]]:
        k = self.k
        top = [list(self.B[i]) + list(self.C[i]) for i in range(k)]
        bottom = [list(self.C[i]) + [-x for x in self.B[i]] for i in range(k)]
        return top + bottom


def construct_f_family(spec: FFamilySpec) -> SignedGraph:
    return from_matrix(spec.matrix())


def random_f_spec(rng, k: int, density: float = 0.7) -> FFamilySpec:
    def entry() -> int:
        return rng.choice((-1, 1)) if rng.random() < density else 0

    B = [[0] * k for _ in range(k)]
    C = [[0] * k for _ in range(k)]
    for i in range(k):
        C[i][i] = entry()
        for j in range(i + 1, k):
            B[i][j] = B[j][i] = entry()
            C[i][j] = C[j][i] = entry()
    return FFamilySpec.of(B, C)


def f_spec_after_switch(spec: FFamilySpec, v: int) -> tuple[FFamilySpec, tuple[int, ...]]:
    """Block form of the graph switched at vertex ``v``.

    Switching at ``v`` and then exchanging ``v`` with its partner ``v +- k``
    gives a matrix of the same ``[[B', C'], [C', -B']]`` shape.  Returns the
    new blocks and the exchange as a vertex permutation, so that
    ``switch(g, {v})`` relabelled by the permutation equals the rebuilt
    graph.  Raises ``AssertionError`` if the shape is not reproduced.
    """
    k = spec.k
    a = spec.matrix()
    n = 2 * k
    for j in range(n):
        if j != v:
            a[v][j] = -a[v][j]
            a[j][v] = -a[j][v]
    partner = v + k if v < k else v - k
    perm = list(range(n))
    perm[v], perm[partner] = partner, v
    b = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            b[perm[i]][perm[j]] = a[i][j]
    B = [row[:k] for row in b[:k]]
    C = [row[k:] for row in b[:k]]
    new = FFamilySpec.of(B, C)
    assert new.matrix() == b, "switched graph left the block family"
    return new, tuple(perm)


def construct_gc_split(g: Graph) -> SignedGraph:
    """Complete graph on ``2m`` vertices; negative edges are ``g`` on the
    first ``m`` vertices and the complement of ``g`` on the last ``m``."""
    return seidel_of_graph(g.disjoint_union(g.complement()))


def is_self_complementary(g: Graph) -> bool:
    return isomorphic_graphs(g, g.complement()) is not None


def _require_sc(g: Graph, name: str) -> None:
    if not is_self_complementary(g):
        raise GraphError(f"{name} is not self-complementary")


def construct_selfcomp(mode: str, g: Graph, h: Graph | None = None) -> SignedGraph:
    """Complete signed graph whose negative edges induce a join, a disjoint
    union, or a cone built from self-complementary graphs."""
    _require_sc(g, "G")
    if mode == "cone":
        if h is not None and h.order != 1:
            raise GraphError("cone takes no second graph (it is a single vertex)")
        h = Graph.empty(1)
    elif mode in ("join", "union"):
        if h is None:
            raise GraphError(f"{mode} needs a second graph H")
        _require_sc(h, "H")
    else:
        raise GraphError(f"unknown mode {mode!r}")
    neg = g.join(h) if mode == "join" else g.disjoint_union(h)
    return seidel_of_graph(neg)


def _antimorphism_types(m: int) -> list[list[int]]:
    """Cycle types of a complementing permutation: cycles of length divisible
    by 4 and at most one fixed point."""
    if m % 4 not in (0, 1):
        return []
    target = m - m % 4

    def parts(rest: int, largest: int) -> list[list[int]]:
        if rest == 0:
            return [[]]
        out = []
        for p in range(min(rest, largest), 0, -4):
            if p % 4 == 0:
                out.extend([p] + tail for tail in parts(rest - p, p))
        return out

    return [t + [1] * (m % 4) for t in parts(target, target)]


def self_complementary_graphs(m: int) -> list[Graph]:
    """All self-complementary graphs on ``m`` vertices up to isomorphism.

    Every such graph has a complementing permutation whose cycles have
    length divisible by 4 (plus one fixed point when ``m`` is odd); for
    each cycle type every graph it complements is generated and the results
    are deduplicated by certificate.
    """
    if m > 9:
        raise GraphError("self-complementary graph enumeration supports m <= 9")
    if m < 0:
        raise GraphError("m must be non-negative")
    if m in (0, 1):
        return [Graph.empty(m)]
    found: dict[bytes, Graph] = {}
    for cycle_type in _antimorphism_types(m):
        sigma = [0] * m
        start = 0
        for length in cycle_type:
            for i in range(length):
                sigma[start + i] = start + (i + 1) % length
            start += length
        seen = set()
        orbits = []
        for a, b in combinations(range(m), 2):
            if (a, b) in seen:
                continue
            orbit = []
            e = (a, b)
            while e not in seen:
                seen.add(e)
                orbit.append(e)
                x, y = sigma[e[0]], sigma[e[1]]
                e = (min(x, y), max(x, y))
            orbits.append(orbit)
        if any(len(o) % 2 for o in orbits):
            continue
        for choice in range(1 << len(orbits)):
            edges = []
            for idx, orbit in enumerate(orbits):
                first = choice >> idx & 1
                edges.extend(e for pos, e in enumerate(orbit) if (pos % 2 == 0) == bool(first))
            g = Graph.from_edges(m, edges)
            found.setdefault(graph_certificate(g), g)
    return [found[c] for c in sorted(found)]


def construct_join_signed(g1: SignedGraph, g2: SignedGraph) -> SignedGraph:
    """Join with positive cross edges; needs each input isomorphic to its
    negation (plain isomorphism, no switching)."""
    for name, g in (("first", g1), ("second", g2)):
        if signed_isomorphism(g, negate(g)) is None:
            raise GraphError(f"{name} graph is not isomorphic to its negation")
    k = g1.order
    edges = g1.signed_edges()
    edges += [(u + k, v + k, s) for u, v, s in g2.signed_edges()]
    edges += [(u, k + v, 1) for u in range(k) for v in range(g2.order)]
    return make_signed_graph(k + g2.order, edges)


# hexagon core shared by gamma_s and gamma_st, in 1-based labels
_CORE_POSITIVE = [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6), (4, 6)]
_CORE_NEGATIVE = [(1, 4)]


def _core_edges() -> list[tuple[int, int, int]]:
    return [(u - 1, v - 1, 1) for u, v in _CORE_POSITIVE] + [
        (u - 1, v - 1, -1) for u, v in _CORE_NEGATIVE
    ]


def construct_gamma_s(s: int) -> SignedGraph:
    """Hexagon core plus ``s`` vertices joined positively to 1 and 5."""
    if s < 0:
        raise GraphError("s must be non-negative")
    edges = _core_edges()
    for i in range(s):
        u = 6 + i
        edges += [(0, u, 1), (4, u, 1)]
    return make_signed_graph(6 + s, edges)


def construct_gamma_st(s: int, t: int) -> SignedGraph:
    """Hexagon core plus ``s`` positive 3-edge paths from 1 to 4 and ``t``
    positive 3-edge paths from 4 to 6 (two new vertices per path)."""
    if s < 0 or t < 1:
        raise GraphError("need s >= 0 and t >= 1")
    edges = _core_edges()
    nxt = 6
    for ends, count in (((0, 3), s), ((3, 5), t)):
        a, b = ends
        for _ in range(count):
            x, y = nxt, nxt + 1
            nxt += 2
            edges += [(a, x, 1), (x, y, 1), (y, b, 1)]
    return make_signed_graph(nxt, edges)


def paley_graph(q: int) -> Graph:
    f = field(q)
    squares = f.nonzero_squares()
    return Graph.from_edges(
        q, ((a, b) for a, b in combinations(range(q), 2) if f.sub(a, b) in squares)
    )


def paley_conference(q: int) -> SignedGraph:
    """Seidel matrix of the Paley graph on GF(q) plus an isolated vertex.

    Order ``q + 1``; the isolated vertex is the last one.
    """
    if prime_power(q) is None or q % 4 != 1 or q > 1024:
        raise GraphError(f"q = {q} must be a prime power, 1 mod 4, at most 1024")
    p = paley_graph(q)
    return seidel_of_graph(p.disjoint_union(Graph.empty(1)))


def is_conference(g: SignedGraph) -> bool:
    """Exact check of ``C C^T = (n - 1) I``."""
    a = g.matrix()
    n = g.order
    for i in range(n):
        for j in range(n):
            dot = sum(a[i][k] * a[j][k] for k in range(n))
            if dot != (n - 1 if i == j else 0):
                return False
    return True


# Triangle a1 a2 a3 whose sides run through the midpoints b2 (a1a2), b3
# (a2a3) and b1 (a3a1), plus the inner triangle b1 b2 b3; c1, c2 isolated.
# Joining a1-a2 directly instead (two disjoint triangles) gives a graph
# whose spectrum is not symmetric.
_EXCEP8_NEGATIVE = [
    ("a1", "b2"), ("b2", "a2"), ("a2", "b3"), ("b3", "a3"), ("a3", "b1"), ("b1", "a1"),
    ("b1", "b2"), ("b2", "b3"), ("b3", "b1"),
]
_EXCEP8_LABELS = {name: i for i, name in enumerate(["a1", "a2", "a3", "b1", "b2", "b3"])}

_EXCEP9_NEGATIVE = [
    ("a1", "a2"), ("a1", "a3"), ("a2", "a3"), ("a2", "b1"), ("a2", "b2"),
    ("a3", "b1"), ("a3", "b2"), ("b1", "b2"), ("b1", "b3"), ("b2", "b3"),
]
_EXCEP9_LABELS = {name: i for i, name in enumerate(["a1", "a2", "a3", "b1", "b2", "b3"])}

_NON_SIGN_POSITIVE = [(1, 2), (1, 5), (1, 6), (2, 4), (3, 6), (4, 5), (5, 6)]
_NON_SIGN_NEGATIVE = [(4, 6)]

NAMED_INSTANCES = ("excep8", "excep9", "non-sign")


def named_instance(name: str) -> SignedGraph:
    if name == "excep8":
        edges = [(_EXCEP8_LABELS[a], _EXCEP8_LABELS[b]) for a, b in _EXCEP8_NEGATIVE]
        return seidel_of_graph(Graph.from_edges(8, edges))
    if name == "excep9":
        edges = [(_EXCEP9_LABELS[a], _EXCEP9_LABELS[b]) for a, b in _EXCEP9_NEGATIVE]
        return seidel_of_graph(Graph.from_edges(9, edges))
    if name == "non-sign":
        return make_signed_graph(
            6,
            [(u - 1, v - 1, 1) for u, v in _NON_SIGN_POSITIVE]
            + [(u - 1, v - 1, -1) for u, v in _NON_SIGN_NEGATIVE],
        )
    raise GraphError(f"unknown instance {name!r}; choose from {', '.join(NAMED_INSTANCES)}")
