"""Canonical labelling of unsigned graphs and of switching classes.

Two engines:

* :func:`graph_canon` -- individualisation/refinement over equitable
  partitions; the certificate is the minimum adjacency bit-string over the
  leaves of the search tree.  Used for unsigned graphs and for complete
  signed graphs (through the graph obtained by switching one vertex to be
  all-positive).
* :func:`_signed_lex_code` -- exact lexicographic minimum over all vertex
  orders of an interleaved (adjacency, normalised sign) encoding, for signed
  graphs that are not complete.

Both prune sibling branches that differ by a transposition of twins, which
is an automorphism (for signed graphs, a switching automorphism), so no
leaf certificate is lost.
"""
from __future__ import annotations

from typing import Sequence

from .graph import Graph, GraphError, SignedGraph

MAX_CANON_ORDER = 10

TAG_COMPLETE = 0x43  # "C"
TAG_GENERAL = 0x47  # "G"


def _popcount(x: int) -> int:
    return x.bit_count()


def _refine(cells: list[list[int]], adj: Sequence[int]) -> list[list[int]]:
    """Coarsest equitable refinement; split cells keep ascending-count order."""
    cells = [c[:] for c in cells]
    changed = True
    while changed:
        changed = False
        for w in range(len(cells)):
            wmask = 0
            for v in cells[w]:
                wmask |= 1 << v
            out = []
            split = False
            for cell in cells:
                if len(cell) == 1:
                    out.append(cell)
                    continue
                counts: dict[int, list[int]] = {}
                for v in cell:
                    counts.setdefault(_popcount(adj[v] & wmask), []).append(v)
                if len(counts) == 1:
                    out.append(cell)
                else:
                    split = True
                    out.extend(counts[k] for k in sorted(counts))
            if split:
                cells = out
                changed = True
                break
    return cells


def _encode(order: Sequence[int], adj: Sequence[int]) -> int:
    """Adjacency bits in column order (0,1),(0,2),(1,2),(0,3),..."""
    code = 0
    for k in range(1, len(order)):
        row = adj[order[k]]
        for i in range(k):
            code = code << 1 | (row >> order[i] & 1)
    return code


def graph_canon(
    adj: Sequence[int], colors: Sequence | None = None
) -> tuple[int, list[int]]:
    """Canonical certificate and one canonical order of an unsigned graph.

    ``order[k]`` is the vertex placed at position ``k``.  Equal certificates
    (for equal colour lists) mean isomorphic graphs.  ``colors``, if given,
    must be an isomorphism-invariant vertex labelling; vertices are then
    ordered by colour first.
    """
    n = len(adj)
    if n == 0:
        return 0, []
    if colors is None:
        cells = [list(range(n))]
    else:
        groups: dict = {}
        for v in range(n):
            groups.setdefault(colors[v], []).append(v)
        cells = [groups[k] for k in sorted(groups)]

    best: list = [None, None]

    def search(cells: list[list[int]]) -> None:
        cells = _refine(cells, adj)
        if len(cells) == n:
            order = [c[0] for c in cells]
            code = _encode(order, adj)
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, order
            return
        size = min(len(c) for c in cells if len(c) > 1)
        t = next(i for i, c in enumerate(cells) if len(c) == size)
        target = cells[t]
        reps: list[int] = []
        for v in target:
            if any(adj[v] & ~(1 << u) == adj[u] & ~(1 << v) for u in reps):
                continue
            reps.append(v)
            rest = [u for u in target if u != v]
            search(cells[:t] + [[v], rest] + cells[t + 1:])

    search(cells)
    return best[0], best[1]


def graph_certificate(h: Graph) -> bytes:
    code, _ = graph_canon(h.adj)
    nbits = h.order * (h.order - 1) // 2
    return bytes([h.order]) + code.to_bytes((nbits + 7) // 8, "big")


def isomorphic_graphs(g: Graph, h: Graph) -> list[int] | None:
    """A vertex map ``perm`` with ``g.relabel(perm) == h``, or ``None``."""
    if g.order != h.order or g.size != h.size:
        return None
    cg, og = graph_canon(g.adj)
    ch, oh = graph_canon(h.adj)
    if cg != ch:
        return None
    perm = [0] * g.order
    for k in range(g.order):
        perm[og[k]] = oh[k]
    return perm


# -- complete signed graphs ---------------------------------------------------

def normalised_at(g: SignedGraph, root: int) -> tuple[list[int], list[int]]:
    """Negative graph on ``V - {root}`` after switching ``root`` all-positive.

    Returns ``(vertices, adj)`` with ``adj`` indexed by position in
    ``vertices``.
    """
    n = g.order
    others = [v for v in range(n) if v != root]
    nr = g.neg[root]
    adj = []
    for a in others:
        row = 0
        flip_a = nr >> a & 1
        for j, b in enumerate(others):
            if b != a and (g.neg[a] >> b & 1) ^ flip_a ^ (nr >> b & 1):
                row |= 1 << j
        adj.append(row)
    return others, adj


def negative_triangle_counts(g: SignedGraph) -> list[int]:
    """Per vertex, the number of negative triangles through it (complete ``g``)."""
    n = g.order
    counts = [0] * n
    for a in range(n):
        for b in range(a + 1, n):
            ab = g.neg[a] >> b & 1
            for c in range(b + 1, n):
                if ab ^ (g.neg[a] >> c & 1) ^ (g.neg[b] >> c & 1):
                    counts[a] += 1
                    counts[b] += 1
                    counts[c] += 1
    return counts


def complete_canon(g: SignedGraph) -> tuple[int, int, list[int]]:
    """``(certificate, root, order)`` for a complete signed graph.

    Roots are restricted to the vertices on the fewest negative triangles
    (a switching-invariant count); vertices of the normalised graph are
    coloured by the same count.
    """
    tri = negative_triangle_counts(g)
    low = min(tri) if tri else 0
    best = None
    for r in range(g.order):
        if tri[r] != low:
            continue
        others, adj = normalised_at(g, r)
        code, order = graph_canon(adj, [tri[v] for v in others])
        if best is None or code < best[0]:
            best = (code, r, [others[i] for i in order])
    return best


# -- general signed graphs ----------------------------------------------------

def _signed_twins(g: SignedGraph, u: int, w: int) -> bool:
    """Swapping ``u`` and ``w`` (plus a switching) is a switching automorphism."""
    bu, bw = 1 << u, 1 << w
    if g.adj[u] & ~bw != g.adj[w] & ~bu:
        return False
    common = g.adj[u] & ~bw
    diff = (g.neg[u] ^ g.neg[w]) & common
    return diff == 0 or diff == common


def _signed_lex_code(g: SignedGraph) -> tuple[int, list[int]]:
    """Minimum interleaved encoding over all vertex orders.

    Column ``k`` contributes ``k`` gap bits (1 = non-adjacent to position
    ``i``) followed by ``k`` sign bits of the normalised graph.  Minimising
    gap bits first makes every order a BFS order, so the normalising tree is
    "parent = earliest adjacent position", which matches
    :func:`signsym.graph.switching_normal_form` on the relabelled graph.
    """
    n = g.order
    if n == 0:
        return 0, []
    twin_of = {}
    for u in range(n):
        for w in range(u + 1, n):
            if _signed_twins(g, u, w):
                twin_of.setdefault(u, set()).add(w)
                twin_of.setdefault(w, set()).add(u)

    # frontier states: (order, factors, used mask); all share one prefix
    frontier = [([], [], 0)]
    prefix = 0
    for k in range(n):
        best_key = None
        nxt = []
        for order, fac, used in frontier:
            tried: list[int] = []
            for v in range(n):
                if used >> v & 1:
                    continue
                if any(t in twin_of.get(v, ()) for t in tried):
                    continue
                tried.append(v)
                row, nrow = g.adj[v], g.neg[v]
                gap = 0
                parent = -1
                for i in range(k):
                    if row >> order[i] & 1:
                        gap <<= 1
                        if parent < 0:
                            parent = i
                    else:
                        gap = gap << 1 | 1
                fv = 1 if parent < 0 else fac[parent] * (-1 if nrow >> order[parent] & 1 else 1)
                sg = 0
                for i in range(k):
                    bit = 0
                    if row >> order[i] & 1:
                        s = (-1 if nrow >> order[i] & 1 else 1) * fac[i] * fv
                        bit = 1 if s < 0 else 0
                    sg = sg << 1 | bit
                key = gap << k | sg
                if best_key is None or key < best_key:
                    best_key = key
                    nxt = [(order + [v], fac + [fv], used | 1 << v)]
                elif key == best_key:
                    nxt.append((order + [v], fac + [fv], used | 1 << v))
        prefix = prefix << (2 * k) | best_key
        frontier = nxt
    return prefix, frontier[0][0]


# -- codes ----------------------------------------------------------------------

def _code_bits(tag: int, n: int) -> int:
    m = n - 1
    return m * (m - 1) // 2 if tag == TAG_COMPLETE else n * (n - 1)


def canonical_code(g: SignedGraph) -> bytes:
    """Byte string identifying ``g``'s switching-isomorphism class.

    Layout: tag byte (complete / general), order byte, then the certificate
    bits big-endian.  Fixed length for a given tag and order.
    """
    if g.order > MAX_CANON_ORDER:
        raise GraphError(f"canonical codes are supported up to order {MAX_CANON_ORDER}")
    if g.is_complete():
        tag, (cert, _, _) = TAG_COMPLETE, complete_canon(g)
    else:
        tag, (cert, _) = TAG_GENERAL, _signed_lex_code(g)
    nbits = _code_bits(tag, g.order)
    return bytes([tag, g.order]) + cert.to_bytes((nbits + 7) // 8, "big")


def graph_from_code(code: bytes) -> SignedGraph:
    """A representative of the class named by ``code``.

    For general codes this is the normalised, canonically labelled graph;
    for complete codes it is the complete graph whose vertex 0 is
    all-positive.
    """
    from .graph import make_signed_graph

    tag, n = code[0], code[1]
    nbits = _code_bits(tag, n)
    bits = int.from_bytes(code[2:], "big")
    pos = nbits

    def take(count: int) -> int:
        nonlocal pos
        pos -= count
        return bits >> pos & ((1 << count) - 1)

    edges = []
    if tag == TAG_COMPLETE:
        neg = set()
        for k in range(1, n - 1):
            col = take(k)
            for i in range(k):
                if col >> (k - 1 - i) & 1:
                    neg.add((i + 1, k + 1))
        edges = [(u, v, -1 if (u, v) in neg else 1) for u in range(n) for v in range(u + 1, n)]
    elif tag == TAG_GENERAL:
        for k in range(1, n):
            gap = take(k)
            sg = take(k)
            for i in range(k):
                shift = k - 1 - i
                if not gap >> shift & 1:
                    edges.append((i, k, -1 if sg >> shift & 1 else 1))
    else:
        raise GraphError(f"unknown code tag {tag:#x}")
    return make_signed_graph(max(n, 1), edges)
