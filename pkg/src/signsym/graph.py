"""Signed graphs and the switching / negation / permutation algebra.

Graphs are stored as per-vertex bitmasks: ``adj[v]`` holds the neighbours of
``v`` and ``neg[v]`` the subset joined to ``v`` by a negative edge.  Both are
tuples of ints, so values are hashable, equality is order-independent and a
sign lookup is a pair of bit tests.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Raised for malformed graph input (bad endpoints, loops, duplicates)."""


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True, slots=True)
class Graph:
    """Unsigned simple graph on vertices ``0..order-1``."""

    order: int
    adj: tuple[int, ...]

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]]) -> Graph:
        if order < 0:
            raise GraphError(f"negative order {order}")
        adj = [0] * order
        for u, v in edges:
            _check_pair(order, u, v)
            if adj[u] >> v & 1:
                raise GraphError(f"duplicate edge {min(u, v)}-{max(u, v)}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(order, tuple(adj))

    @classmethod
    def empty(cls, order: int) -> Graph:
        return cls(order, (0,) * order)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.order) for v in _bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def size(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def complement(self) -> Graph:
        full = (1 << self.order) - 1
        return Graph(self.order, tuple(full & ~m & ~(1 << v) for v, m in enumerate(self.adj)))

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Image of the graph under the vertex map ``v -> perm[v]``."""
        return Graph.from_edges(self.order, ((perm[u], perm[v]) for u, v in self.edges()))

    def disjoint_union(self, other: Graph) -> Graph:
        k = self.order
        return Graph.from_edges(
            k + other.order, self.edges() + [(u + k, v + k) for u, v in other.edges()]
        )

    def join(self, other: Graph) -> Graph:
        k = self.order
        cross = [(u, k + v) for u in range(k) for v in range(other.order)]
        return Graph.from_edges(
            k + other.order, self.edges() + [(u + k, v + k) for u, v in other.edges()] + cross
        )

    def is_connected(self) -> bool:
        return len(components(self.adj)) <= 1


@dataclass(frozen=True, slots=True)
class SignedGraph:
    """Simple graph with a sign in {+1, -1} on every edge.

    ``neg[v]`` is always a sub-mask of ``adj[v]``.  Build instances through
    :func:`make_signed_graph` unless the masks are already known to be valid.
    """

    order: int
    adj: tuple[int, ...]
    neg: tuple[int, ...]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def sign(self, u: int, v: int) -> int:
        """Sign of edge ``uv``; 0 when ``u`` and ``v`` are not adjacent."""
        if not self.adj[u] >> v & 1:
            return 0
        return -1 if self.neg[u] >> v & 1 else 1

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.order) for v in _bits(self.adj[u] >> (u + 1) << (u + 1))]

    def signed_edges(self) -> list[tuple[int, int, int]]:
        return [(u, v, -1 if self.neg[u] >> v & 1 else 1) for u, v in self.edges()]

    @property
    def size(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def underlying(self) -> Graph:
        return Graph(self.order, self.adj)

    def negative_graph(self) -> Graph:
        return Graph(self.order, self.neg)

    def is_complete(self) -> bool:
        full = (1 << self.order) - 1
        return all(m == full ^ (1 << v) for v, m in enumerate(self.adj))

    def matrix(self) -> list[list[int]]:
        """Adjacency matrix with entries in {-1, 0, 1}."""
        n = self.order
        return [[self.sign(u, v) for v in range(n)] for u in range(n)]

    def __repr__(self) -> str:
        body = ", ".join(f"({u},{v},{'+' if s > 0 else '-'})" for u, v, s in self.signed_edges())
        return f"SignedGraph({self.order}, [{body}])"


@dataclass(frozen=True, slots=True)
class SignedPermutation:
    """Vertex bijection plus a per-vertex factor in {+1, -1}.

    As a matrix this is ``P = Perm * diag(flip)``; acting on a graph it
    conjugates the adjacency matrix.
    """

    perm: tuple[int, ...]
    flip: tuple[int, ...]

    def __post_init__(self):
        n = len(self.perm)
        if sorted(self.perm) != list(range(n)):
            raise GraphError(f"not a bijection on 0..{n - 1}: {self.perm}")
        if len(self.flip) != n or any(f not in (1, -1) for f in self.flip):
            raise GraphError("flip must hold one factor in {+1, -1} per vertex")

    @classmethod
    def plain(cls, perm: Sequence[int]) -> SignedPermutation:
        return cls(tuple(perm), (1,) * len(perm))

    @classmethod
    def diagonal(cls, order: int, flipped: Iterable[int]) -> SignedPermutation:
        flip = [1] * order
        for v in flipped:
            flip[v] = -1
        return cls(tuple(range(order)), tuple(flip))


@dataclass(frozen=True, slots=True)
class SwitchWitness:
    """Certificate that ``switch(apply(source, perm), switch_set) == target``.

    ``switch_set`` is given in the labels of the target graph.
    """

    perm: tuple[int, ...]
    switch_set: frozenset[int]

    def replay(self, source: SignedGraph) -> SignedGraph:
        return switch(apply(source, SignedPermutation.plain(self.perm)), self.switch_set)

    def certifies(self, source: SignedGraph, target: SignedGraph) -> bool:
        return self.replay(source) == target


def _check_pair(order: int, u: int, v: int) -> None:
    if not (0 <= u < order and 0 <= v < order):
        raise GraphError(f"endpoint out of range in edge {u}-{v} (order {order})")
    if u == v:
        raise GraphError(f"loop at vertex {u}")


def make_signed_graph(order: int, signed_edges: Iterable[tuple[int, int, int]]) -> SignedGraph:
    """Validate ``(u, v, sign)`` triples and build a :class:`SignedGraph`."""
    if order < 1:
        raise GraphError(f"order must be at least 1, got {order}")
    adj = [0] * order
    neg = [0] * order
    for u, v, s in signed_edges:
        _check_pair(order, u, v)
        if s not in (1, -1):
            raise GraphError(f"sign of edge {u}-{v} must be +1 or -1, got {s!r}")
        if adj[u] >> v & 1:
            raise GraphError(f"duplicate edge {min(u, v)}-{max(u, v)}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        if s < 0:
            neg[u] |= 1 << v
            neg[v] |= 1 << u
    return SignedGraph(order, tuple(adj), tuple(neg))


def from_matrix(matrix: Sequence[Sequence[int]]) -> SignedGraph:
    n = len(matrix)
    for i in range(n):
        if len(matrix[i]) != n or matrix[i][i] != 0:
            raise GraphError("adjacency matrix must be square with zero diagonal")
        for j in range(i):
            if matrix[i][j] != matrix[j][i]:
                raise GraphError(f"adjacency matrix not symmetric at ({i}, {j})")
    return make_signed_graph(
        n, ((i, j, matrix[i][j]) for i, j in combinations(range(n), 2) if matrix[i][j])
    )


def positive(h: Graph) -> SignedGraph:
    """``h`` with every edge positive."""
    return SignedGraph(h.order, h.adj, (0,) * h.order)


def switch(g: SignedGraph, x: Iterable[int]) -> SignedGraph:
    """Negate the signs of all edges with exactly one endpoint in ``x``."""
    xmask = 0
    for v in x:
        if not 0 <= v < g.order:
            raise GraphError(f"switching vertex {v} out of range (order {g.order})")
        xmask |= 1 << v
    neg = []
    for v in range(g.order):
        # edges from v that cross the cut
        cross = g.adj[v] & (~xmask if xmask >> v & 1 else xmask)
        neg.append(g.neg[v] ^ cross)
    return SignedGraph(g.order, g.adj, tuple(neg))


def negate(g: SignedGraph) -> SignedGraph:
    return SignedGraph(g.order, g.adj, tuple(a ^ m for a, m in zip(g.adj, g.neg)))


def apply(g: SignedGraph, sp: SignedPermutation) -> SignedGraph:
    """Conjugate by a signed permutation.

    Edge ``uv`` of sign ``s`` becomes edge ``perm[u] perm[v]`` with sign
    ``s * flip[u] * flip[v]``.
    """
    if len(sp.perm) != g.order:
        raise GraphError(f"permutation has length {len(sp.perm)}, graph order {g.order}")
    p, f = sp.perm, sp.flip
    return make_signed_graph(
        g.order, ((p[u], p[v], s * f[u] * f[v]) for u, v, s in g.signed_edges())
    )


def seidel_of_graph(h: Graph) -> SignedGraph:
    """Complete signed graph whose negative edges are exactly the edges of ``h``.

    Its adjacency matrix is the Seidel matrix ``J - I - 2A(h)``.
    """
    full = (1 << h.order) - 1
    adj = tuple(full ^ (1 << v) for v in range(h.order))
    return SignedGraph(h.order, adj, h.adj)


def components(adj: Sequence[int]) -> list[list[int]]:
    """Connected components, each sorted, listed by smallest vertex."""
    seen = 0
    out = []
    for r in range(len(adj)):
        if seen >> r & 1:
            continue
        comp = 0
        frontier = 1 << r
        while frontier:
            comp |= frontier
            nxt = 0
            for v in _bits(frontier):
                nxt |= adj[v]
            frontier = nxt & ~comp
        seen |= comp
        out.append(list(_bits(comp)))
    return out


def switching_normal_form(g: SignedGraph) -> tuple[SignedGraph, frozenset[int]]:
    """Switch so that a BFS spanning forest becomes all-positive.

    Each component is searched breadth-first from its smallest vertex,
    neighbours in increasing order; the root is never switched, which makes
    the switching set unique.
    """
    n = g.order
    factor = [0] * n
    for root in range(n):
        if factor[root]:
            continue
        factor[root] = 1
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in _bits(g.adj[u]):
                if not factor[v]:
                    factor[v] = factor[u] * (-1 if g.neg[u] >> v & 1 else 1)
                    queue.append(v)
    x = frozenset(v for v in range(n) if factor[v] < 0)
    return switch(g, x), x


def switching_equivalent(g1: SignedGraph, g2: SignedGraph) -> frozenset[int] | None:
    """A set ``X`` with ``switch(g1, X) == g2``, or ``None`` if there is none."""
    if g1.order != g2.order or g1.adj != g2.adj:
        raise GraphError("switching equivalence needs identical underlying graphs")
    nf1, x1 = switching_normal_form(g1)
    nf2, x2 = switching_normal_form(g2)
    if nf1 != nf2:
        return None
    # switch(g1, x1) == switch(g2, x2), so g2 == switch(g1, x1 ^ x2)
    return frozenset(x1 ^ x2)


def cycle_sign(g: SignedGraph, cycle: Sequence[int]) -> int:
    s = 1
    for a, b in zip(cycle, list(cycle[1:]) + [cycle[0]]):
        e = g.sign(a, b)
        if e == 0:
            raise GraphError(f"{a}-{b} is not an edge")
        s *= e
    return s
