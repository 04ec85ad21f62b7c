"""Brute-force class oracle for tiny complete signed graphs.

Each labelled complete signed graph on ``n`` vertices is a mask over the
``C(n, 2)`` pairs (bit set = negative edge).  Classes are the connected
components of the action of single-vertex switchings and adjacent
transpositions, found with a union-find over all ``2^C(n,2)`` masks.
"""
from __future__ import annotations

from itertools import combinations

from .graph import SignedGraph, make_signed_graph

MAX_ORACLE_ORDER = 6


def _pairs(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(n), 2))


def mask_to_graph(n: int, mask: int) -> SignedGraph:
    return make_signed_graph(
        n, [(u, v, -1 if mask >> i & 1 else 1) for i, (u, v) in enumerate(_pairs(n))]
    )


def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def brute_force_classes(n: int) -> list[int]:
    """One representative mask per switching-isomorphism class, ascending."""
    if not 1 <= n <= MAX_ORACLE_ORDER:
        raise ValueError(f"oracle supports 1 <= n <= {MAX_ORACLE_ORDER}")
    pairs = _pairs(n)
    index = {p: i for i, p in enumerate(pairs)}
    stars = [sum(1 << i for i, p in enumerate(pairs) if v in p) for v in range(n)]
    swaps = []
    for t in range(n - 1):
        image = []
        for u, v in pairs:
            su = t + 1 if u == t else t if u == t + 1 else u
            sv = t + 1 if v == t else t if v == t + 1 else v
            image.append(index[(min(su, sv), max(su, sv))])
        swaps.append(image)

    size = 1 << len(pairs)
    parent = list(range(size))

    def union(a: int, b: int) -> None:
        ra, rb = _find(parent, a), _find(parent, b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    for mask in range(size):
        for star in stars:
            union(mask, mask ^ star)
        for image in swaps:
            moved = 0
            for i, j in enumerate(image):
                if mask >> i & 1:
                    moved |= 1 << j
            union(mask, moved)
    return sorted({_find(parent, m) for m in range(size)})
