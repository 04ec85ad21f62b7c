"""Switching isomorphism and sign-symmetry, with replayable witnesses."""
from __future__ import annotations

from .canon import MAX_CANON_ORDER, canonical_code
from .graph import GraphError, SignedGraph, SwitchWitness, negate
from .spectra import char_poly

# the witness search is a pruned backtrack, usable past the canonical-code cap
MAX_SEARCH_ORDER = 16

__all__ = [
    "MAX_CANON_ORDER",
    "MAX_SEARCH_ORDER",
    "canonical_code",
    "is_sign_symmetric",
    "signed_isomorphism",
    "switching_isomorphic",
]


def _vertex_invariants(g: SignedGraph) -> list[tuple[int, int, int]]:
    """(degree, positive triangles, negative triangles) per vertex.

    Triangle signs survive switching, so these are switching-isomorphism
    invariants.
    """
    n = g.order
    out = []
    for v in range(n):
        pos = negt = 0
        nb = g.adj[v]
        m = nb
        while m:
            low = m & -m
            m ^= low
            a = low.bit_length() - 1
            common = g.adj[a] & nb & ~((low << 1) - 1)
            while common:
                lb = common & -common
                common ^= lb
                b = lb.bit_length() - 1
                par = (g.neg[v] >> a & 1) ^ (g.neg[v] >> b & 1) ^ (g.neg[a] >> b & 1)
                if par:
                    negt += 1
                else:
                    pos += 1
        out.append((nb.bit_count(), pos, negt))
    return out


def _search_order(g: SignedGraph, inv: list, classes: dict) -> list[int]:
    """Vertices of ``g`` in BFS order, each component started at its rarest
    invariant class, so most vertices meet an already-mapped neighbour."""
    n = g.order
    order: list[int] = []
    placed = 0
    while len(order) < n:
        start = min(
            (v for v in range(n) if not placed >> v & 1),
            key=lambda v: (len(classes[inv[v]]), v),
        )
        queue = [start]
        placed |= 1 << start
        while queue:
            u = queue.pop(0)
            order.append(u)
            m = g.adj[u] & ~placed
            nbrs = []
            while m:
                low = m & -m
                m ^= low
                nbrs.append(low.bit_length() - 1)
            nbrs.sort(key=lambda v: (len(classes[inv[v]]), v))
            for v in nbrs:
                placed |= 1 << v
                queue.append(v)
    return order


def _search(g1: SignedGraph, g2: SignedGraph, allow_switch: bool):
    """Backtracking for (perm, flips) with ``apply(g1, (perm, flips)) == g2``."""
    n = g1.order
    if n != g2.order or g1.size != g2.size:
        return None
    inv1 = _vertex_invariants(g1)
    inv2 = _vertex_invariants(g2)
    if not allow_switch:
        # plain isomorphism: refine by signed degree too
        inv1 = [(*t, g1.neg[v].bit_count()) for v, t in enumerate(inv1)]
        inv2 = [(*t, g2.neg[v].bit_count()) for v, t in enumerate(inv2)]
    if sorted(inv1) != sorted(inv2):
        return None
    classes: dict = {}
    for v in range(n):
        classes.setdefault(inv2[v], []).append(v)
    order = _search_order(g1, inv1, classes)

    perm = [-1] * n
    flip = [0] * n
    used = 0

    def extend(k: int) -> bool:
        nonlocal used
        if k == n:
            return True
        v = order[k]
        # an earlier-mapped neighbour fixes the flip of v
        anchor = next((u for u in order[:k] if g1.adj[v] >> u & 1), -1)
        for w in classes[inv1[v]]:
            if used >> w & 1:
                continue
            if anchor >= 0:
                pa = perm[anchor]
                if not g2.adj[pa] >> w & 1:
                    continue
                s1 = -1 if g1.neg[anchor] >> v & 1 else 1
                s2 = -1 if g2.neg[pa] >> w & 1 else 1
                fv = s1 * s2 * flip[anchor]
                if not allow_switch and fv != 1:
                    continue
            else:
                fv = 1
            ok = True
            for u in order[:k]:
                pu = perm[u]
                a1 = g1.adj[v] >> u & 1
                if a1 != (g2.adj[w] >> pu & 1):
                    ok = False
                    break
                if a1:
                    s1 = -1 if g1.neg[v] >> u & 1 else 1
                    s2 = -1 if g2.neg[w] >> pu & 1 else 1
                    if s1 * flip[u] * fv != s2:
                        ok = False
                        break
            if not ok:
                continue
            perm[v], flip[v] = w, fv
            used |= 1 << w
            if extend(k + 1):
                return True
            used &= ~(1 << w)
            perm[v] = -1
        return False

    if not extend(0):
        return None
    return tuple(perm), tuple(flip)


def _check_search_size(*graphs: SignedGraph) -> None:
    for g in graphs:
        if g.order > MAX_SEARCH_ORDER:
            raise GraphError(f"switching isomorphism search is capped at order {MAX_SEARCH_ORDER}")


def switching_isomorphic(g1: SignedGraph, g2: SignedGraph) -> SwitchWitness | None:
    """A witness ``(perm, X)`` with ``switch(apply(g1, perm), X) == g2``."""
    _check_search_size(g1, g2)
    if g1.order != g2.order or g1.size != g2.size:
        return None
    if char_poly(g1) != char_poly(g2):
        return None
    found = _search(g1, g2, allow_switch=True)
    if found is None:
        return None
    perm, flip = found
    x = frozenset(perm[v] for v in range(g1.order) if flip[v] < 0)
    return SwitchWitness(perm, x)


def signed_isomorphism(g1: SignedGraph, g2: SignedGraph) -> tuple[int, ...] | None:
    """A plain vertex map (no switching) carrying ``g1`` onto ``g2``."""
    _check_search_size(g1, g2)
    found = _search(g1, g2, allow_switch=False)
    return None if found is None else found[0]


def is_sign_symmetric(g: SignedGraph) -> tuple[bool, SwitchWitness | None]:
    """Whether ``g`` is switching isomorphic to its negation, with witness."""
    w = switching_isomorphic(g, negate(g))
    return w is not None, w


def same_class(g1: SignedGraph, g2: SignedGraph) -> bool:
    return canonical_code(g1) == canonical_code(g2)
