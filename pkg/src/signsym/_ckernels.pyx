# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; mirrors ``_pykernels`` exactly.

int64 arithmetic is only exact within the bounds checked by the callers in
``kernels.py`` (charpoly: order <= 12; scan/orbit: order <= 9).
"""
from libc.stdint cimport int64_t, uint64_t, uint32_t
from libc.string cimport memset

BACKEND = "cython"

DEF MAXN = 16
DEF MAXC = 64


cdef void _berkowitz(int n, int64_t* a, int64_t* out) noexcept nogil:
    # a: row-major n*n; out: n+1 coefficients
    cdef int64_t coeffs[MAXN + 1]
    cdef int64_t nxt[MAXN + 1]
    cdef int64_t col[MAXN + 2]
    cdef int64_t v[MAXN]
    cdef int64_t w[MAXN]
    cdef int r, i, j, k
    cdef int64_t acc
    coeffs[0] = 1
    for r in range(n):
        col[0] = 1
        col[1] = -a[r * n + r]
        for i in range(r):
            v[i] = a[i * n + r]
        for k in range(r):
            acc = 0
            for i in range(r):
                acc += a[r * n + i] * v[i]
            col[k + 2] = -acc
            for i in range(r):
                acc = 0
                for j in range(r):
                    acc += a[i * n + j] * v[j]
                w[i] = acc
            for i in range(r):
                v[i] = w[i]
        for i in range(r + 2):
            acc = 0
            for j in range((i if i < r else r) + 1):
                acc += col[i - j] * coeffs[j]
            nxt[i] = acc
        for i in range(r + 2):
            coeffs[i] = nxt[i]
    for i in range(n + 1):
        out[i] = coeffs[i]


def charpoly(int n, flat):
    cdef int64_t a[MAXN * MAXN]
    cdef int64_t out[MAXN + 1]
    cdef int i
    if n > MAXN:
        raise ValueError("order too large for the compiled kernel")
    for i in range(n * n):
        a[i] = flat[i]
    _berkowitz(n, a, out)
    return [out[i] for i in range(n + 1)]


def cycle_census(int n, adj, neg, int max_len):
    cdef uint64_t A[MAXC]
    cdef uint64_t N[MAXC]
    cdef int64_t plus[MAXC + 1]
    cdef int64_t minus[MAXC + 1]
    # explicit DFS stack: one frame per path position
    cdef uint64_t cand[MAXC + 1]
    cdef int path[MAXC + 1]
    cdef int par[MAXC + 1]
    cdef uint64_t seen, higher, low
    cdef int s, depth, u, v, second, p
    if n > MAXC:
        raise ValueError("order too large for the compiled kernel")
    for u in range(n):
        A[u] = adj[u]
        N[u] = neg[u]
    memset(plus, 0, sizeof(plus))
    memset(minus, 0, sizeof(minus))
    if max_len >= 3:
        with nogil:
            for s in range(n):
                higher = ~((<uint64_t>2 << s) - 1) if s < 63 else 0
                path[0] = s
                par[0] = 0
                seen = <uint64_t>1 << s
                cand[0] = A[s] & higher
                depth = 0
                while depth >= 0:
                    if cand[depth] == 0:
                        if depth > 0:
                            seen &= ~(<uint64_t>1 << path[depth])
                        depth -= 1
                        continue
                    low = cand[depth] & (~cand[depth] + 1)
                    cand[depth] ^= low
                    v = 0
                    while (low >> v) != 1:
                        v += 1
                    u = path[depth]
                    p = par[depth] ^ <int>((N[u] >> v) & 1)
                    depth += 1
                    path[depth] = v
                    par[depth] = p
                    seen |= low
                    second = path[1]
                    # path has depth+1 vertices
                    if depth >= 2 and v > second and (A[v] >> s) & 1:
                        if p ^ <int>((N[v] >> s) & 1):
                            minus[depth + 1] += 1
                        else:
                            plus[depth + 1] += 1
                    if depth + 1 < max_len:
                        cand[depth] = A[v] & higher & ~seen
                    else:
                        cand[depth] = 0
    return ([plus[i] for i in range(max_len + 1)],
            [minus[i] for i in range(max_len + 1)])


cdef inline int _rows_from_mask(int n, uint64_t mask, uint32_t* rows) noexcept nogil:
    cdef int i, j, bit = 0
    for i in range(n):
        rows[i] = 0
    for j in range(1, n - 1):
        for i in range(j):
            if (mask >> bit) & 1:
                rows[i + 1] |= 1u << (j + 1)
                rows[j + 1] |= 1u << (i + 1)
            bit += 1
    return 0


cdef inline int _neg_triangles(int n, uint32_t* rows) noexcept nogil:
    cdef int a, b, c, count = 0, ab
    for a in range(n):
        for b in range(a + 1, n):
            ab = (rows[a] >> b) & 1
            for c in range(b + 1, n):
                count += ab ^ ((rows[a] >> c) & 1) ^ ((rows[b] >> c) & 1)
    return count


cdef inline bint _sym_spectrum(int n, uint32_t* rows) noexcept nogil:
    cdef int64_t a[MAXN * MAXN]
    cdef int64_t out[MAXN + 1]
    cdef int i, j
    for i in range(n):
        for j in range(n):
            if i == j:
                a[i * n + j] = 0
            elif (rows[i] >> j) & 1:
                a[i * n + j] = -1
            else:
                a[i * n + j] = 1
    _berkowitz(n, a, out)
    i = 1
    while i <= n:
        if out[i] != 0:
            return False
        i += 2
    return True


def scan(int n, long long start, long long stop, unsigned char[::1] seen, bint sym_only):
    cdef uint32_t rows[MAXN]
    cdef long long mask, found = -1
    cdef int triples = n * (n - 1) * (n - 2) // 6
    if n > 9:
        raise ValueError("scan supports order <= 9")
    if sym_only and triples % 2:
        return -1
    with nogil:
        mask = start
        while mask < stop:
            if (seen[mask >> 3] >> (mask & 7)) & 1:
                mask += 1
                continue
            if not sym_only:
                found = mask
                break
            _rows_from_mask(n, <uint64_t>mask, rows)
            if 2 * _neg_triangles(n, rows) == triples and _sym_spectrum(n, rows):
                found = mask
                break
            mask += 1
    return found


cdef long long _place(int k, int m, uint64_t mask, int* order, uint32_t* g, int* others,
                      uint32_t used, unsigned char[::1] seen) noexcept nogil:
    cdef long long fresh = 0
    cdef int idx, i, v
    cdef uint64_t col
    cdef int base
    if k == m:
        if not ((seen[mask >> 3] >> (mask & 7)) & 1):
            seen[mask >> 3] |= <unsigned char>(1 << (mask & 7))
            return 1
        return 0
    base = k * (k - 1) // 2
    for idx in range(m):
        v = others[idx]
        if (used >> v) & 1:
            continue
        col = 0
        for i in range(k):
            if (g[v] >> order[i]) & 1:
                col |= (<uint64_t>1) << (base + i)
        order[k] = v
        fresh += _place(k + 1, m, mask | col, order, g, others, used | (1u << v), seen)
    return fresh


def mark_orbit(int n, neg_rows, unsigned char[::1] seen):
    cdef uint32_t rows[MAXN]
    cdef uint32_t g[MAXN]
    cdef int others[MAXN]
    cdef int order[MAXN]
    cdef int r, a, b, m, idx
    cdef long long fresh = 0
    if n > 9:
        raise ValueError("orbit marking supports order <= 9")
    for a in range(n):
        rows[a] = neg_rows[a]
    m = n - 1
    with nogil:
        for r in range(n):
            idx = 0
            for a in range(n):
                if a != r:
                    others[idx] = a
                    idx += 1
                g[a] = 0
            for a in range(n):
                if a == r:
                    continue
                for b in range(n):
                    if b == r or b == a:
                        continue
                    if ((rows[a] >> b) & 1) ^ ((rows[r] >> a) & 1) ^ ((rows[r] >> b) & 1):
                        g[a] |= 1u << b
            fresh += _place(0, m, 0, order, g, others, 0, seen)
    return fresh
