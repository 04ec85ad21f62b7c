"""Exact characteristic polynomials, Seidel determinants and ranks.

Everything that decides a property is integer arithmetic; floating point is
confined to :func:`eigenvalues`, which exists for display.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .graph import GraphError, SignedGraph


@dataclass(frozen=True, slots=True)
class CharPoly:
    """``x^n + a_1 x^(n-1) + ... + a_n``; ``coeffs`` holds ``a_1..a_n``."""

    coeffs: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> int:
        """``a_i`` for ``1 <= i <= n``; ``a_0 = 1``."""
        if i == 0:
            return 1
        if not 1 <= i <= len(self.coeffs):
            raise IndexError(i)
        return self.coeffs[i - 1]

    def odd_vanish(self) -> bool:
        return all(c == 0 for c in self.coeffs[0::2])

    def negated(self) -> CharPoly:
        """Polynomial of the negated matrix: ``a_i -> (-1)^i a_i``."""
        return CharPoly(tuple(-c if i % 2 == 0 else c for i, c in enumerate(self.coeffs)))

    def __call__(self, x: int) -> int:
        value = 1
        for c in self.coeffs:
            value = value * x + c
        return value

    def __str__(self) -> str:
        n = len(self.coeffs)
        terms = [f"x^{n}" if n > 1 else "x" if n == 1 else "1"]
        for i, c in enumerate(self.coeffs, start=1):
            if c == 0:
                continue
            power = n - i
            mono = "" if power == 0 else "x" if power == 1 else f"x^{power}"
            mag = abs(c)
            body = f"{mag}{mono}" if (mag != 1 or not mono) else mono
            terms.append(("- " if c < 0 else "+ ") + body)
        return " ".join(terms)


def _flat(g: SignedGraph) -> list[int]:
    return [x for row in g.matrix() for x in row]


def char_poly(g: SignedGraph) -> CharPoly:
    """Exact characteristic polynomial of the adjacency matrix (Berkowitz)."""
    coeffs = kernels.charpoly(g.order, _flat(g))
    return CharPoly(tuple(int(c) for c in coeffs[1:]))


def is_symmetric_spectrum(g: SignedGraph) -> bool:
    """True iff every odd coefficient ``a_1, a_3, ...`` vanishes."""
    return char_poly(g).odd_vanish()


def eigenvalues(g: SignedGraph) -> list[float]:
    """Adjacency eigenvalues in descending order (display only)."""
    if g.order == 0:
        return []
    a = np.array(g.matrix(), dtype=float)
    return [float(x) for x in np.linalg.eigvalsh(a)[::-1]]


def bareiss_det(matrix: list[list[int]]) -> int:
    """Determinant of an integer matrix by fraction-free elimination."""
    m = [row[:] for row in matrix]
    n = len(m)
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
        prev = pivot
    return sign * m[n - 1][n - 1] if n else 1


def bareiss_rank(matrix: list[list[int]]) -> int:
    """Rank over the rationals by fraction-free row reduction."""
    m = [row[:] for row in matrix]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    rank, prev = 0, 1
    for c in range(cols):
        pivot_row = next((r for r in range(rank, rows) if m[r][c] != 0), None)
        if pivot_row is None:
            continue
        m[rank], m[pivot_row] = m[pivot_row], m[rank]
        pivot = m[rank][c]
        for r in range(rank + 1, rows):
            for j in range(c + 1, cols):
                m[r][j] = (m[r][j] * pivot - m[r][c] * m[rank][j]) // prev
            m[r][c] = 0
        prev = pivot
        rank += 1
    return rank


def _require_complete(g: SignedGraph) -> None:
    if not g.is_complete():
        raise GraphError("Seidel arithmetic needs a complete signed graph")


class SeidelCongruenceError(ArithmeticError):
    """A Seidel determinant broke ``det = 1 - n (mod 4)``; indicates a bug."""


def seidel_det(g: SignedGraph) -> int:
    """Exact determinant of a complete signed graph's adjacency matrix.

    Checks ``det = 1 - n (mod 4)``, which also makes the determinant odd for
    even ``n``.
    """
    _require_complete(g)
    det = bareiss_det(g.matrix())
    n = g.order
    if (det - (1 - n)) % 4:
        raise SeidelCongruenceError(f"det {det} is not 1 - {n} mod 4")
    return det


def seidel_rank(g: SignedGraph) -> int:
    _require_complete(g)
    return bareiss_rank(g.matrix())
