"""Pure-Python versions of the hot kernels.

Same signatures and results as the compiled ``_ckernels`` module; used when
the extension is not built, and as the reference side of the kernel tests.

Graph masks: a graph on ``m`` vertices is an int whose bit ``j*(j-1)/2 + i``
(``i < j``) marks the edge ``ij``.  In the scan/orbit kernels such a graph is
the negative-edge graph on vertices ``1..m`` of a complete signed graph of
order ``m + 1`` in which vertex 0 has only positive edges.
"""
from __future__ import annotations

from typing import Sequence

BACKEND = "python"


def charpoly(n: int, flat: Sequence[int]) -> list[int]:
    """Coefficients ``[1, a_1, ..., a_n]`` of ``det(xI - A)`` (Berkowitz).

    ``flat`` is the row-major ``n*n`` integer matrix.  Division-free, so the
    result is exact for any integer input.
    """
    a = [list(flat[i * n:(i + 1) * n]) for i in range(n)]
    coeffs = [1]
    for r in range(n):
        row = a[r][:r]
        v = [a[i][r] for i in range(r)]
        col = [1, -a[r][r]]
        for _ in range(r):
            col.append(-sum(x * y for x, y in zip(row, v)))
            v = [sum(a[i][j] * v[j] for j in range(r)) for i in range(r)]
        coeffs = [
            sum(col[i - j] * coeffs[j] for j in range(min(i, r) + 1)) for i in range(r + 2)
        ]
    return coeffs


def cycle_census(n: int, adj: Sequence[int], neg: Sequence[int], max_len: int):
    """Counts of positive and negative simple cycles, indexed by length.

    Each cycle is rooted at its smallest vertex and traversed in the
    direction whose second vertex is smaller than its last.
    """
    plus = [0] * (max_len + 1)
    minus = [0] * (max_len + 1)
    if max_len < 3:
        return plus, minus
    for s in range(n):
        higher = ~((1 << (s + 1)) - 1)
        # (vertex, visited mask, length, sign parity, second vertex)
        stack = []
        m = adj[s] & higher
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            stack.append((v, (1 << s) | low, 2, neg[s] >> v & 1, v))
        while stack:
            u, seen, length, par, second = stack.pop()
            if length >= 3 and u > second and adj[u] >> s & 1:
                if par ^ (neg[u] >> s & 1):
                    minus[length] += 1
                else:
                    plus[length] += 1
            if length == max_len:
                continue
            m = adj[u] & higher & ~seen
            while m:
                low = m & -m
                v = low.bit_length() - 1
                m ^= low
                stack.append((v, seen | low, length + 1, par ^ (neg[u] >> v & 1), second))
    return plus, minus


def _seidel_rows(n: int, mask: int) -> list[int]:
    """Negative-adjacency rows of the complete graph encoded by ``mask``."""
    rows = [0] * n
    bit = 0
    for j in range(1, n - 1):
        for i in range(j):
            if mask >> bit & 1:
                rows[i + 1] |= 1 << (j + 1)
                rows[j + 1] |= 1 << (i + 1)
            bit += 1
    return rows


def _negative_triangles(n: int, rows: Sequence[int]) -> int:
    count = 0
    for a in range(n):
        for b in range(a + 1, n):
            ab = rows[a] >> b & 1
            for c in range(b + 1, n):
                count += ab ^ (rows[a] >> c & 1) ^ (rows[b] >> c & 1)
    return count


def _complete_flat(n: int, rows: Sequence[int]) -> list[int]:
    return [0 if i == j else (-1 if rows[i] >> j & 1 else 1) for i in range(n) for j in range(n)]


def scan(n: int, start: int, stop: int, seen: bytearray, sym_only: bool) -> int:
    """First mask in ``[start, stop)`` not marked in ``seen`` that survives.

    With ``sym_only`` a mask survives when its complete signed graph has a
    symmetric spectrum (all odd coefficients zero); otherwise every unmarked
    mask survives.  Returns -1 when the range is exhausted.
    """
    triples = n * (n - 1) * (n - 2) // 6
    for mask in range(start, stop):
        if seen[mask >> 3] >> (mask & 7) & 1:
            continue
        if not sym_only:
            return mask
        if triples % 2:
            # a_3 = 2(2 c3- - C(n,3)) can never vanish
            return -1
        rows = _seidel_rows(n, mask)
        if 2 * _negative_triangles(n, rows) != triples:
            continue
        c = charpoly(n, _complete_flat(n, rows))
        if all(c[i] == 0 for i in range(1, n + 1, 2)):
            return mask
    return -1


def mark_orbit(n: int, neg_rows: Sequence[int], seen: bytearray) -> int:
    """Mark every mask that represents the switching class of ``neg_rows``.

    ``neg_rows`` are the negative-adjacency rows of a complete signed graph
    of order ``n``.  For each root ``r`` the class is switched so that ``r``
    has only positive edges, and every labelling of the remaining vertices by
    ``1..n-1`` is marked.  Returns the number of newly set bits.
    """
    fresh = 0
    for r in range(n):
        others = [v for v in range(n) if v != r]
        # normalised negative graph on the other vertices
        nr = neg_rows[r]
        g = {}
        for a in others:
            g[a] = 0
            for b in others:
                if b != a and (neg_rows[a] >> b & 1) ^ (nr >> a & 1) ^ (nr >> b & 1):
                    g[a] |= 1 << b
        m = n - 1
        order = [0] * m
        used = 0

        def place(k: int, mask: int) -> None:
            nonlocal used, fresh
            if k == m:
                byte, bit = mask >> 3, 1 << (mask & 7)
                if not seen[byte] & bit:
                    seen[byte] |= bit
                    fresh += 1
                return
            base = k * (k - 1) // 2
            for v in others:
                if used >> v & 1:
                    continue
                col = 0
                gv = g[v]
                for i in range(k):
                    if gv >> order[i] & 1:
                        col |= 1 << (base + i)
                order[k] = v
                used |= 1 << v
                place(k + 1, mask | col)
                used &= ~(1 << v)

        place(0, 0)
    return fresh
