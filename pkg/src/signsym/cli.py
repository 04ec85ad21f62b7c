"""Command-line interface.

Exit codes: 0 success, 1 a verification check failed, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import kernels
from .census import cycle_census
from .constructions import (
    NAMED_INSTANCES,
    FFamilySpec,
    construct_f_family,
    construct_gamma_s,
    construct_gamma_st,
    construct_gc_split,
    construct_selfcomp,
    named_instance,
    paley_conference,
)
from .enumerate import count_report, ques2_search
from .graph import GraphError, SignedGraph, seidel_of_graph
from .io import parse_graph6, parse_sg, record_table, record_to_json, report_text
from .io import report_to_json, serialize_sg
from .spectra import char_poly, eigenvalues, is_symmetric_spectrum
from .symcheck import is_sign_symmetric
from .verify import verify_paper


class UsageError(Exception):
    pass


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def load_graph(path: str, fmt: str) -> SignedGraph:
    text = _read_text(path)
    if fmt == "graph6":
        # an unsigned graph stands for its Seidel matrix
        return seidel_of_graph(parse_graph6(text.splitlines()[0] if text.strip() else ""))
    return parse_sg(text)


def _bool(b: bool) -> str:
    return "true" if b else "false"


def _matrix(text: str) -> list[list[int]]:
    """``"0,1;1,0"`` -> ``[[0, 1], [1, 0]]``."""
    try:
        return [[int(x) for x in row.split(",")] for row in text.split(";")]
    except ValueError:
        raise UsageError(f"bad matrix {text!r}; write rows as 'a,b;c,d'") from None


# -- commands ------------------------------------------------------------------

def cmd_charpoly(args) -> int:
    cp = char_poly(load_graph(args.file, args.format))
    print(cp)
    print("coefficients:", " ".join(str(cp[i]) for i in range(cp.order + 1)))
    return 0


def cmd_spectrum(args) -> int:
    for x in eigenvalues(load_graph(args.file, args.format)):
        print(f"{x + 0.0:.6f}")
    return 0


def cmd_sym_spectrum(args) -> int:
    print(_bool(is_symmetric_spectrum(load_graph(args.file, args.format))))
    return 0


def cmd_sign_symmetric(args) -> int:
    ok, witness = is_sign_symmetric(load_graph(args.file, args.format))
    print(_bool(ok))
    if ok and args.witness:
        print("perm:", " ".join(map(str, witness.perm)))
        print("switch:", " ".join(map(str, sorted(witness.switch_set))) or "-")
    return 0


def cmd_census(args) -> int:
    g = load_graph(args.file, args.format)
    c = cycle_census(g, args.max_len)
    print("length  positive  negative")
    for length, (p, m) in c.as_dict().items():
        print(f"{length:<6}  {p:<8}  {m}")
    return 0


def cmd_construct(args) -> int:
    kind = args.kind
    if kind == "f-family":
        g = construct_f_family(FFamilySpec.of(_matrix(args.B), _matrix(args.C)))
    elif kind == "gc-split":
        g = construct_gc_split(parse_graph6(args.graph6))
    elif kind == "selfcomp":
        h = parse_graph6(args.H) if args.H else None
        g = construct_selfcomp(args.mode, parse_graph6(args.G), h)
    elif kind == "gamma-s":
        g = construct_gamma_s(args.s)
    elif kind == "gamma-st":
        g = construct_gamma_st(args.s, args.t)
    elif kind == "paley":
        g = paley_conference(args.q)
    else:
        g = named_instance(args.name)
    text = serialize_sg(g)
    if args.output == "-":
        sys.stdout.write(text)
    else:
        Path(args.output).write_text(text)
    return 0


def _check_order(args) -> None:
    if args.order == 9 and not args.extended:
        raise UsageError("order 9 is the extended run; pass --extended")


def cmd_enumerate(args) -> int:
    _check_order(args)
    mode = "sym-spectrum-only" if args.sym_spectrum_only else "full"
    rep = count_report(args.order, mode, method=args.method, workers=args.workers)
    if args.json:
        print(json.dumps(report_to_json(rep), indent=2))
    else:
        sys.stdout.write(report_text(rep))
    return 0


def cmd_ques2(args) -> int:
    _check_order(args)
    found = ques2_search(args.order, method=args.method, workers=args.workers)
    if args.json:
        print(json.dumps([record_to_json(r) for r in found], indent=2))
        return 0
    print(f"order {args.order}: {len(found)} classes with balanced odd cycles and asymmetric spectrum")
    if found:
        print("\n".join(record_table(found)))
    return 0


def cmd_verify(args) -> int:
    rep = verify_paper(extended=args.extended, workers=args.workers)
    if args.json:
        print(
            json.dumps(
                [
                    {
                        "name": c.name,
                        "status": c.status,
                        "computed": c.computed,
                        "expected": c.expected,
                        "elapsed": round(c.elapsed, 3),
                    }
                    for c in rep.checks
                ],
                indent=2,
                default=str,
            )
        )
    else:
        for c in rep.checks:
            line = f"{c.status}  {c.name}  ({c.elapsed:.2f}s)"
            if c.passed is False:
                line += f"  computed={c.computed} expected={c.expected}"
            print(line)
        failed = len(rep.failed)
        print("all checks passed" if not failed else f"{failed} checks failed")
    return 0 if rep.all_passed else 1


# -- parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="signsym", description="Spectra and sign-symmetry of signed graphs.")
    p.add_argument("--backend", choices=kernels.available_backends(), help="kernel backend")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_cmd(name: str, fn, help_: str):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("file", help="signed edge-list file, or - for stdin")
        sp.add_argument(
            "--format",
            choices=("sg", "graph6"),
            default="sg",
            help="graph6 input is read as an unsigned graph and replaced by its Seidel matrix",
        )
        sp.set_defaults(func=fn)
        return sp

    graph_cmd("charpoly", cmd_charpoly, "exact characteristic polynomial")
    graph_cmd("spectrum", cmd_spectrum, "eigenvalues, descending")
    graph_cmd("sym-spectrum", cmd_sym_spectrum, "is the spectrum symmetric about 0")
    sp = graph_cmd("sign-symmetric", cmd_sign_symmetric, "switching isomorphic to the negation?")
    sp.add_argument("--witness", action="store_true", help="print the permutation and switching set")
    sp = graph_cmd("census", cmd_census, "positive and negative cycle counts")
    sp.add_argument("--max-len", type=int, default=None)

    cp = sub.add_parser("construct", help="build a signed graph and write it as an edge list")
    kinds = cp.add_subparsers(dest="kind", required=True)
    k = kinds.add_parser("f-family")
    k.add_argument("--B", required=True, help="rows as 'a,b;c,d'")
    k.add_argument("--C", required=True)
    k = kinds.add_parser("gc-split")
    k.add_argument("graph6")
    k = kinds.add_parser("selfcomp")
    k.add_argument("mode", choices=("join", "union", "cone"))
    k.add_argument("G", help="graph6")
    k.add_argument("H", nargs="?", help="graph6 (join and union)")
    k = kinds.add_parser("gamma-s")
    k.add_argument("s", type=int)
    k = kinds.add_parser("gamma-st")
    k.add_argument("s", type=int)
    k.add_argument("t", type=int)
    k = kinds.add_parser("paley")
    k.add_argument("q", type=int)
    k = kinds.add_parser("named")
    k.add_argument("name", choices=NAMED_INSTANCES)
    for k in kinds.choices.values():
        k.add_argument("-o", "--output", default="-", help="output file (default stdout)")
    cp.set_defaults(func=cmd_construct)

    def enum_args(sp):
        sp.add_argument("--order", type=int, required=True)
        sp.add_argument("--extended", action="store_true", help="allow order 9")
        sp.add_argument("--method", choices=("auto", "scan", "generate"), default="auto")
        sp.add_argument("--workers", type=int, default=1)
        sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("enumerate", help="switching classes of complete signed graphs")
    enum_args(sp)
    sp.add_argument("--sym-spectrum-only", action="store_true")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("ques2", help="balanced odd cycles without a symmetric spectrum")
    enum_args(sp)
    sp.set_defaults(func=cmd_ques2)

    sp = sub.add_parser("verify-paper", help="run the reproduction checks")
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--extended", action="store_true", help="include the order-9 catalog")
    sp.add_argument("--workers", type=int, default=1)
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.backend:
        kernels.use_backend(args.backend)
    try:
        return args.func(args)
    except (UsageError, GraphError, ValueError) as exc:
        print(f"signsym: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
