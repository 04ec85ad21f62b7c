"""Switching classes of complete signed graphs of small order.

Every class has a representative in which vertex 0 is all-positive, so it is
enough to walk the graphs on vertices ``1..n-1`` (as negative-edge graphs)
and deduplicate by canonical code.  Two walks are available:

``scan``
    every edge mask on ``n - 1`` vertices, with orbit marking in a bitmap so
    each class is canonised about once.  Needs the compiled kernels to be
    quick at ``n = 8`` and is minutes-scale at ``n = 9``.
``generate``
    the isomorphism-free list of graphs on ``n - 1`` vertices.

Both feed the same filter and the same merge, and must agree.
"""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb

from . import kernels
from ._pykernels import _seidel_rows
from .canon import canonical_code, graph_from_code
from .census import odd_cycle_balanced
from .generation import graphs as unlabelled_graphs
from .graph import Graph, SignedGraph, negate, seidel_of_graph
from .spectra import CharPoly, char_poly
from .symcheck import is_sign_symmetric

MIN_ORDER = 3
MAX_ORDER = 9
MODES = ("full", "sym-spectrum-only")
METHODS = ("auto", "scan", "generate")


@dataclass(frozen=True)
class ClassRecord:
    order: int
    canonical: bytes
    negative_rep: Graph
    charpoly: CharPoly
    sym_spectrum: bool
    sign_symmetric: bool
    self_paired_under_negation: bool
    negation_canonical: bytes

    def representative(self) -> SignedGraph:
        return seidel_of_graph(self.negative_rep)


@dataclass
class EnumReport:
    order: int
    mode: str
    method: str
    backend: str
    total_classes: int | None
    sym_spectrum_classes: int
    sym_spectrum_classes_mod_negation: int
    sign_symmetric_classes: int
    elapsed: float
    records: list[ClassRecord] = field(default_factory=list, repr=False)

    @property
    def not_sign_symmetric_mod_negation(self) -> int:
        return self.sym_spectrum_classes_mod_negation - self.sign_symmetric_classes


def _check_args(n: int, mode: str, method: str) -> None:
    if not MIN_ORDER <= n <= MAX_ORDER:
        raise ValueError(f"order must satisfy {MIN_ORDER} <= n <= {MAX_ORDER}, got {n}")
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")


def resolve_method(n: int, method: str = "auto") -> str:
    """``auto`` scans masks when the compiled kernels are active and n <= 8."""
    if method != "auto":
        return method
    return "scan" if kernels.backend() == "cython" and n <= 8 else "generate"


# -- candidate producers -----------------------------------------------------

def _passes_filter(n: int, rows: list[int], sym_only: bool) -> bool:
    if not sym_only:
        return True
    triples = comb(n, 3)
    negt = 0
    for a in range(n):
        for b in range(a + 1, n):
            ab = rows[a] >> b & 1
            for c in range(b + 1, n):
                negt += ab ^ (rows[a] >> c & 1) ^ (rows[b] >> c & 1)
    if 2 * negt != triples:
        return False
    flat = [0 if i == j else (-1 if rows[i] >> j & 1 else 1) for i in range(n) for j in range(n)]
    c = kernels.charpoly(n, flat)
    return all(c[i] == 0 for i in range(1, n + 1, 2))


def _rows_to_graph(n: int, rows: list[int]) -> SignedGraph:
    full = (1 << n) - 1
    adj = tuple(full & ~(1 << v) for v in range(n))
    return SignedGraph(n, adj, tuple(rows))


def _scan_range(n: int, lo: int, hi: int, sym_only: bool) -> list[bytes]:
    seen = bytearray(((1 << comb(n - 1, 2)) + 7) // 8)
    codes = []
    pos = lo
    while True:
        mask = kernels.scan(n, pos, hi, seen, sym_only)
        if mask < 0:
            break
        rows = _seidel_rows(n, mask)
        codes.append(canonical_code(_rows_to_graph(n, rows)))
        kernels.mark_orbit(n, rows, seen)
        pos = mask + 1
    return codes


def _generate_range(n: int, lo: int, hi: int, sym_only: bool) -> list[bytes]:
    codes = set()
    for h in unlabelled_graphs(n - 1)[lo:hi]:
        # shift the graph onto vertices 1..n-1
        rows = [0] + [row << 1 for row in h.adj]
        if _passes_filter(n, rows, sym_only):
            codes.add(canonical_code(_rows_to_graph(n, rows)))
    return sorted(codes)


def _work(args: tuple) -> list[bytes]:
    method, n, lo, hi, sym_only, backend = args
    kernels.use_backend(backend)
    if method == "scan":
        return _scan_range(n, lo, hi, sym_only)
    return _generate_range(n, lo, hi, sym_only)


def _candidate_codes(n: int, method: str, sym_only: bool, workers: int) -> set[bytes]:
    space = 1 << comb(n - 1, 2) if method == "scan" else len(unlabelled_graphs(n - 1))
    parts = max(1, min(workers, space))
    bounds = [space * i // parts for i in range(parts + 1)]
    jobs = [(method, n, bounds[i], bounds[i + 1], sym_only, kernels.backend()) for i in range(parts)]
    if parts == 1:
        results = [_work(jobs[0])]
    else:
        with ProcessPoolExecutor(max_workers=parts) as pool:
            results = list(pool.map(_work, jobs))
    merged: set[bytes] = set()
    for chunk in results:
        merged.update(chunk)
    return merged


# -- public API ----------------------------------------------------------------

def _record(code: bytes) -> ClassRecord:
    g = graph_from_code(code)
    cp = char_poly(g)
    sym = cp.odd_vanish()
    neg_code = canonical_code(negate(g))
    # only a symmetric spectrum can be sign-symmetric; skip the search otherwise
    ss = is_sign_symmetric(g)[0] if sym else False
    return ClassRecord(
        order=g.order,
        canonical=code,
        negative_rep=g.negative_graph(),
        charpoly=cp,
        sym_spectrum=sym,
        sign_symmetric=ss,
        self_paired_under_negation=neg_code == code,
        negation_canonical=neg_code,
    )


def enumerate_complete_classes(
    n: int, mode: str = "full", *, method: str = "auto", workers: int = 1
) -> list[ClassRecord]:
    """One record per switching-isomorphism class of complete signed ``K_n``.

    ``mode="sym-spectrum-only"`` keeps only classes with symmetric spectrum.
    Records are sorted by canonical code.
    """
    _check_args(n, mode, method)
    method = resolve_method(n, method)
    codes = _candidate_codes(n, method, mode == "sym-spectrum-only", workers)
    return [_record(c) for c in sorted(codes)]


def summarise(
    n: int, records: list[ClassRecord], mode: str, method: str, elapsed: float
) -> EnumReport:
    sym = [r for r in records if r.sym_spectrum]
    paired = sum(r.self_paired_under_negation for r in sym)
    return EnumReport(
        order=n,
        mode=mode,
        method=method,
        backend=kernels.backend(),
        total_classes=len(records) if mode == "full" else None,
        sym_spectrum_classes=len(sym),
        sym_spectrum_classes_mod_negation=(len(sym) + paired) // 2,
        sign_symmetric_classes=sum(r.sign_symmetric for r in sym),
        elapsed=elapsed,
        records=records,
    )


def count_report(
    n: int, mode: str = "full", *, method: str = "auto", workers: int = 1
) -> EnumReport:
    """Class counts under both negation conventions, plus sign-symmetry."""
    _check_args(n, mode, method)
    t0 = time.perf_counter()
    records = enumerate_complete_classes(n, mode, method=method, workers=workers)
    return summarise(n, records, mode, resolve_method(n, method), time.perf_counter() - t0)


def negation_pairs(records: list[ClassRecord]) -> dict[bytes, bytes]:
    """Map each class code to the code of its negation."""
    return {r.canonical: r.negation_canonical for r in records}


def ques2_search(
    n: int, *, method: str = "auto", workers: int = 1
) -> list[ClassRecord]:
    """Classes whose odd cycles are all balanced yet whose spectrum is not
    symmetric.  An empty list means no such class of order ``n``."""
    _check_args(n, "full", method)
    out = []
    for r in enumerate_complete_classes(n, "full", method=method, workers=workers):
        # a_3 = -2 (c3+ - c3-), so a nonzero a_3 already unbalances the triangles
        if r.sym_spectrum or (n >= 3 and r.charpoly[3] != 0):
            continue
        if odd_cycle_balanced(r.representative()):
            out.append(r)
    return out
