"""Signed cycle counts and coefficients from elementary subgraphs.

:func:`elementary_coefficients` rebuilds the characteristic polynomial from
packings of disjoint edges and cycles, without any matrix arithmetic, so it
serves as an independent check on :mod:`signsym.spectra`.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from . import kernels
from .graph import GraphError, SignedGraph
from .spectra import CharPoly

MAX_ELEMENTARY_ORDER = 10


@dataclass(frozen=True, slots=True)
class CycleCensus:
    """``plus[l]`` / ``minus[l]`` count positive / negative ``l``-cycles."""

    max_len: int
    plus: tuple[int, ...]
    minus: tuple[int, ...]

    def c_plus(self, length: int) -> int:
        return self.plus[length] if length <= self.max_len else 0

    def c_minus(self, length: int) -> int:
        return self.minus[length] if length <= self.max_len else 0

    def total(self, length: int) -> int:
        return self.c_plus(length) + self.c_minus(length)

    def as_dict(self) -> dict[int, tuple[int, int]]:
        return {l: (self.plus[l], self.minus[l]) for l in range(3, self.max_len + 1)}


def cycle_census(g: SignedGraph, max_len: int | None = None) -> CycleCensus:
    n = g.order
    if max_len is None:
        max_len = n
    if max_len > n:
        raise GraphError(f"max_len {max_len} exceeds order {n}")
    plus, minus = kernels.cycle_census(n, g.adj, g.neg, max_len)
    return CycleCensus(max_len, tuple(int(x) for x in plus), tuple(int(x) for x in minus))


def odd_cycle_balanced(g: SignedGraph, max_len: int | None = None) -> bool:
    """True iff ``c+ == c-`` for every odd cycle length up to ``max_len``."""
    census = cycle_census(g, max_len)
    return all(census.plus[l] == census.minus[l] for l in range(3, census.max_len + 1, 2))


def simple_cycles(adj: tuple[int, ...]) -> Iterator[list[int]]:
    """Each simple cycle once: starts at its smallest vertex, and its second
    vertex is smaller than its last."""
    n = len(adj)
    for s in range(n):
        higher = ~((1 << (s + 1)) - 1)
        path = [s]

        def extend(u: int, seen: int) -> Iterator[list[int]]:
            if len(path) >= 3 and u > path[1] and adj[u] >> s & 1:
                yield list(path)
            m = adj[u] & higher & ~seen
            while m:
                low = m & -m
                m ^= low
                v = low.bit_length() - 1
                path.append(v)
                yield from extend(v, seen | low)
                path.pop()

        yield from extend(s, 1 << s)


@dataclass(frozen=True, slots=True)
class ElementaryPiece:
    """One elementary subgraph: disjoint single edges and cycles."""

    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    cycles: tuple[tuple[int, ...], ...]
    cycle_signs: tuple[int, ...]

    @property
    def components(self) -> int:
        return len(self.edges) + len(self.cycles)

    @property
    def sign_product(self) -> int:
        s = 1
        for c in self.cycle_signs:
            s *= c
        return s

    def term(self) -> int:
        """``(-1)^p(B) * 2^|c(B)| * sigma(B)``."""
        return (-1) ** self.components * 2 ** len(self.cycles) * self.sign_product


@lru_cache(maxsize=8192)
def _skeleton(adj: tuple[int, ...]):
    """Cycles of the underlying graph and all elementary packings of them.

    Packings are stored as ``(vertex_count, base, cycle indices, edges)``
    where ``base = (-1)^components * 2^cycles``; signs enter at evaluation.
    """
    n = len(adj)
    cycles = list(simple_cycles(adj))
    by_min: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for idx, cyc in enumerate(cycles):
        mask = 0
        for v in cyc:
            mask |= 1 << v
        by_min[cyc[0]].append((idx, mask))

    packings = []
    edges: list[tuple[int, int]] = []
    chosen: list[int] = []

    def pack(v: int, covered: int, count: int, comps: int) -> None:
        while v < n and covered >> v & 1:
            v += 1
        if v == n:
            if count:
                base = (-1) ** comps * 2 ** len(chosen)
                packings.append((count, base, tuple(chosen), tuple(edges)))
            return
        # v stays uncovered
        pack(v + 1, covered, count, comps)
        m = adj[v] & ~covered & ~((1 << (v + 1)) - 1)
        while m:
            low = m & -m
            m ^= low
            w = low.bit_length() - 1
            edges.append((v, w))
            pack(v + 1, covered | low | (1 << v), count + 2, comps + 1)
            edges.pop()
        for idx, mask in by_min[v]:
            if mask & covered:
                continue
            chosen.append(idx)
            pack(v + 1, covered | mask, count + mask.bit_count(), comps + 1)
            chosen.pop()

    pack(0, 0, 0, 0)
    return cycles, packings


def _cycle_sign(g: SignedGraph, cyc: list[int]) -> int:
    par = 0
    prev = cyc[-1]
    for v in cyc:
        par ^= g.neg[prev] >> v & 1
        prev = v
    return -1 if par else 1


def elementary_pieces(g: SignedGraph) -> Iterator[ElementaryPiece]:
    _check_size(g)
    cycles, packings = _skeleton(g.adj)
    signs = [_cycle_sign(g, c) for c in cycles]
    for count, _, chosen, edges in packings:
        yield ElementaryPiece(
            count, edges, tuple(tuple(cycles[i]) for i in chosen), tuple(signs[i] for i in chosen)
        )


def _check_size(g: SignedGraph) -> None:
    if g.order > MAX_ELEMENTARY_ORDER:
        raise GraphError(
            f"elementary subgraph enumeration is capped at order {MAX_ELEMENTARY_ORDER}"
        )


def elementary_coefficients(g: SignedGraph) -> CharPoly:
    """Characteristic-polynomial coefficients summed over elementary subgraphs."""
    _check_size(g)
    cycles, packings = _skeleton(g.adj)
    signs = [_cycle_sign(g, c) for c in cycles]
    coeffs = [0] * (g.order + 1)
    for count, base, chosen, _ in packings:
        s = base
        for i in chosen:
            s *= signs[i]
        coeffs[count] += s
    return CharPoly(tuple(coeffs[1:]))
