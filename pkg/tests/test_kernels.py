from __future__ import annotations

import random
from math import comb

import pytest

from signsym import _pykernels, kernels

try:
    from signsym import _ckernels
except ImportError:  # pragma: no cover
    _ckernels = None

needs_c = pytest.mark.skipif(_ckernels is None, reason="compiled kernels not built")


def random_signed(rng, n, p=0.6):
    adj = [0] * n
    neg = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
                if rng.random() < 0.5:
                    neg[u] |= 1 << v
                    neg[v] |= 1 << u
    return adj, neg


def flat(n, adj, neg):
    return [0 if not adj[i] >> j & 1 else (-1 if neg[i] >> j & 1 else 1) for i in range(n) for j in range(n)]


def test_backend_switching():
    assert "python" in kernels.available_backends()
    before = kernels.use_backend("python")
    try:
        assert kernels.backend() == "python"
        with pytest.raises(ValueError):
            kernels.use_backend("fortran")
    finally:
        kernels.use_backend(before)


@needs_c
def test_charpoly_parity():
    rng = random.Random(1)
    for _ in range(300):
        n = rng.randint(1, 12)
        adj, neg = random_signed(rng, n)
        f = flat(n, adj, neg)
        assert list(_ckernels.charpoly(n, f)) == _pykernels.charpoly(n, f)


@needs_c
def test_cycle_census_parity():
    rng = random.Random(2)
    for _ in range(100):
        n = rng.randint(1, 9)
        adj, neg = random_signed(rng, n)
        c = _ckernels.cycle_census(n, adj, neg, n)
        p = _pykernels.cycle_census(n, adj, neg, n)
        assert [list(map(int, x)) for x in c] == [list(x) for x in p]


@needs_c
@pytest.mark.parametrize("n", [4, 5, 6, 7])
@pytest.mark.parametrize("sym_only", [False, True])
def test_scan_and_mark_parity(n, sym_only):
    size = 1 << comb(n - 1, 2)
    runs = []
    for mod in (_pykernels, _ckernels):
        seen = bytearray((size + 7) // 8)
        found = []
        pos = 0
        while True:
            m = mod.scan(n, pos, size, seen, sym_only)
            if m < 0:
                break
            fresh = mod.mark_orbit(n, _pykernels._seidel_rows(n, m), seen)
            found.append((m, fresh))
            pos = m + 1
        runs.append((found, bytes(seen)))
    assert runs[0] == runs[1]


def test_mark_orbit_covers_space():
    # with no filter, the orbits of the found masks tile the whole space
    n = 6
    size = 1 << comb(n - 1, 2)
    seen = bytearray((size + 7) // 8)
    pos = total = classes = 0
    while (m := _pykernels.scan(n, pos, size, seen, False)) >= 0:
        total += _pykernels.mark_orbit(n, _pykernels._seidel_rows(n, m), seen)
        classes += 1
        pos = m + 1
    assert total == size and classes == 16
