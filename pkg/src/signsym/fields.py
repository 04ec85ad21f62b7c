"""Small finite fields GF(p^k), elements encoded as base-p digit integers."""
from __future__ import annotations

from functools import lru_cache
from itertools import product


def prime_power(q: int) -> tuple[int, int] | None:
    """``(p, k)`` with ``q == p**k`` and ``p`` prime, else ``None``."""
    if q < 2:
        return None
    p = next(d for d in range(2, q + 1) if q % d == 0)
    k = 0
    while q % p == 0:
        q //= p
        k += 1
    return (p, k) if q == 1 else None


def _polymod(a: list[int], m: list[int], p: int) -> list[int]:
    """Remainder of ``a`` by monic ``m``; coefficient lists, lowest degree first."""
    a = a[:]
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] % p
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
    return [x % p for x in a[:dm]] + [0] * max(0, dm - len(a))


def _irreducible(p: int, k: int) -> list[int]:
    """First monic irreducible polynomial of degree ``k`` over GF(p)."""
    if k == 1:
        return [0, 1]
    for tail in product(range(p), repeat=k):
        m = list(tail) + [1]
        if m[0] == 0:
            continue
        reducible = False
        for d in range(1, k // 2 + 1):
            for low in product(range(p), repeat=d):
                f = list(low) + [1]
                if not any(_polymod(m, f, p)):
                    reducible = True
                    break
            if reducible:
                break
        if not reducible:
            return m
    raise AssertionError("no irreducible polynomial found")


class GF:
    """GF(q) with q = p^k.  ``mul``/``add``/``sub`` act on ints in ``range(q)``."""

    def __init__(self, q: int):
        pk = prime_power(q)
        if pk is None:
            raise ValueError(f"{q} is not a prime power")
        self.q = q
        self.p, self.k = pk
        self.modulus = _irreducible(self.p, self.k)

    def digits(self, x: int) -> list[int]:
        out = []
        for _ in range(self.k):
            x, d = divmod(x, self.p)
            out.append(d)
        return out

    def undigits(self, ds: list[int]) -> int:
        x = 0
        for d in reversed(ds):
            x = x * self.p + d
        return x

    def add(self, a: int, b: int) -> int:
        return self.undigits([(x + y) % self.p for x, y in zip(self.digits(a), self.digits(b))])

    def sub(self, a: int, b: int) -> int:
        return self.undigits([(x - y) % self.p for x, y in zip(self.digits(a), self.digits(b))])

    def mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return a * b % self.p
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * self.k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        return self.undigits(_polymod(prod, self.modulus, self.p))

    def nonzero_squares(self) -> frozenset[int]:
        return frozenset(self.mul(x, x) for x in range(1, self.q))


@lru_cache(maxsize=None)
def field(q: int) -> GF:
    return GF(q)
