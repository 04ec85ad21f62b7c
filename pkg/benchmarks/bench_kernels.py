"""Compare the compiled and pure-Python kernels on the enumeration hot loops.

    python benchmarks/bench_kernels.py [--repeat 3] [--order 7] [--sym-order 6]
"""
from __future__ import annotations

import argparse
import random
import time
from math import comb

from signsym import _pykernels, kernels


def random_signed(rng, n, p):
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


def bench_charpoly(mod, rng_seed, count=3000, n=8):
    rng = random.Random(rng_seed)
    mats = [flat(n, *random_signed(rng, n, 1.0)) for _ in range(count)]
    t0 = time.perf_counter()
    for m in mats:
        mod.charpoly(n, m)
    return time.perf_counter() - t0


def bench_census(mod, rng_seed, count=20, n=9):
    rng = random.Random(rng_seed)
    graphs = [random_signed(rng, n, 1.0) for _ in range(count)]
    t0 = time.perf_counter()
    for adj, neg in graphs:
        mod.cycle_census(n, adj, neg, n)
    return time.perf_counter() - t0


def bench_scan(mod, n, sym_only):
    size = 1 << comb(n - 1, 2)
    seen = bytearray((size + 7) // 8)
    pos = 0
    t0 = time.perf_counter()
    while (m := mod.scan(n, pos, size, seen, sym_only)) >= 0:
        mod.mark_orbit(n, _pykernels._seidel_rows(n, m), seen)
        pos = m + 1
    return time.perf_counter() - t0


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--order", type=int, default=7, help="order for the full mask scan")
    # C(n, 3) must be even or the filtered scan exits at once
    ap.add_argument("--sym-order", type=int, default=6, help="order for the filtered mask scan")
    args = ap.parse_args(argv)

    if "cython" not in kernels.available_backends():
        print("compiled kernels are not built; only the Python timings are shown")
    mods = {"python": _pykernels}
    if "cython" in kernels.available_backends():
        from signsym import _ckernels

        mods["cython"] = _ckernels

    cases = {
        "charpoly 3000x K8": lambda m: bench_charpoly(m, 1),
        "cycle census 20x K9": lambda m: bench_census(m, 2),
        f"scan+orbits n={args.order} full": lambda m: bench_scan(m, args.order, False),
        f"scan+orbits n={args.sym_order} sym-only": lambda m: bench_scan(m, args.sym_order, True),
    }
    print(f"{'case':<32}" + "".join(f"{name:>12}" for name in mods) + f"{'speedup':>10}")
    for label, fn in cases.items():
        times = {name: min(fn(mod) for _ in range(args.repeat)) for name, mod in mods.items()}
        row = f"{label:<32}" + "".join(f"{t:>11.3f}s" for t in times.values())
        if "cython" in times:
            row += f"{times['python'] / max(times['cython'], 1e-9):>9.1f}x"
        print(row)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
