"""Kernel dispatch: the compiled extension when built, pure Python otherwise.

Set ``SIGNSYM_PURE_PYTHON=1`` to force the fallback, or call
:func:`use_backend` at runtime (the benchmark and kernel tests do).
"""
from __future__ import annotations

import os
from typing import Sequence

from . import _pykernels

try:  # pragma: no cover - depends on the build
    from . import _ckernels
except ImportError:  # pragma: no cover
    _ckernels = None

# int64 Berkowitz stays exact up to this order for {-1, 0, 1} matrices
CHARPOLY_INT64_MAX_ORDER = 12

_active = _pykernels
if _ckernels is not None and not os.environ.get("SIGNSYM_PURE_PYTHON"):
    _active = _ckernels


def available_backends() -> list[str]:
    return ["python"] + (["cython"] if _ckernels is not None else [])


def backend() -> str:
    return _active.BACKEND


def use_backend(name: str) -> str:
    """Switch the active backend; returns the previous one."""
    global _active
    previous = _active.BACKEND
    if name == "python":
        _active = _pykernels
    elif name == "cython":
        if _ckernels is None:
            raise RuntimeError("compiled kernels are not built")
        _active = _ckernels
    else:
        raise ValueError(f"unknown backend {name!r}")
    return previous


def charpoly(n: int, flat: Sequence[int]) -> list[int]:
    if n <= CHARPOLY_INT64_MAX_ORDER and all(-1 <= x <= 1 for x in flat):
        return _active.charpoly(n, flat)
    return _pykernels.charpoly(n, flat)


def cycle_census(n: int, adj: Sequence[int], neg: Sequence[int], max_len: int):
    if n > 64:
        return _pykernels.cycle_census(n, adj, neg, max_len)
    return _active.cycle_census(n, adj, neg, max_len)


def scan(n: int, start: int, stop: int, seen: bytearray, sym_only: bool) -> int:
    return _active.scan(n, start, stop, seen, sym_only)


def mark_orbit(n: int, neg_rows: Sequence[int], seen: bytearray) -> int:
    return _active.mark_orbit(n, neg_rows, seen)
