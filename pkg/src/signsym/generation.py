"""Isomorphism-free generation of small unsigned graphs.

Graphs on ``m`` vertices are grown from those on ``m - 1`` by adding one
vertex.  Any graph arises from its deletion at a vertex of maximum degree,
so children whose new vertex is not of maximum degree are skipped before
canonisation; survivors are deduplicated by certificate.
"""
from __future__ import annotations

from functools import lru_cache

from .canon import graph_canon
from .graph import Graph

MAX_GENERATION_ORDER = 9


def _children(parent: tuple[int, ...]):
    k = len(parent)
    degrees = [row.bit_count() for row in parent]
    for s in range(1 << k):
        d = s.bit_count()
        if any(deg + (s >> u & 1) > d for u, deg in enumerate(degrees)):
            continue
        rows = [row | ((s >> u & 1) << k) for u, row in enumerate(parent)]
        rows.append(s)
        yield tuple(rows)


@lru_cache(maxsize=None)
def _level(m: int) -> tuple[tuple[int, ...], ...]:
    if m == 0:
        return ((),)
    seen: dict[int, tuple[int, ...]] = {}
    for parent in _level(m - 1):
        for child in _children(parent):
            cert, order = graph_canon(child)
            if cert not in seen:
                # store the canonically relabelled graph
                pos = {v: i for i, v in enumerate(order)}
                relabelled = [0] * m
                for v, row in enumerate(child):
                    r = 0
                    while row:
                        low = row & -row
                        row ^= low
                        r |= 1 << pos[low.bit_length() - 1]
                    relabelled[pos[v]] = r
                seen[cert] = tuple(relabelled)
    return tuple(seen[c] for c in sorted(seen))


def graphs(m: int) -> list[Graph]:
    """All graphs on ``m`` vertices up to isomorphism, canonically labelled."""
    if not 0 <= m <= MAX_GENERATION_ORDER:
        raise ValueError(f"graph generation supports 0 <= m <= {MAX_GENERATION_ORDER}")
    return [Graph(m, rows) for rows in _level(m)]
