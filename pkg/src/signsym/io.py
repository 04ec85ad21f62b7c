"""Signed edge-list files, graph6 ingestion and JSON reports."""
from __future__ import annotations

from typing import Any

import networkx as nx

from .enumerate import ClassRecord, EnumReport
from .graph import Graph, GraphError, SignedGraph, make_signed_graph

SIGNS = {"+": 1, "-": -1}


class SgParseError(GraphError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def parse_sg(text: str) -> SignedGraph:
    """Parse ``sg <order>`` followed by ``e <u> <v> <+|->`` lines.

    Blank lines and lines starting with ``#`` are ignored.
    """
    order = None
    edges: list[tuple[int, int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if order is None:
            if len(parts) != 2 or parts[0] != "sg":
                raise SgParseError(lineno, f"expected header 'sg <order>', got {line!r}")
            try:
                order = int(parts[1])
            except ValueError:
                raise SgParseError(lineno, f"order must be an integer, got {parts[1]!r}") from None
            if order < 1:
                raise SgParseError(lineno, f"order must be at least 1, got {order}")
            continue
        if len(parts) != 4 or parts[0] != "e":
            raise SgParseError(lineno, f"expected 'e <u> <v> <+|->', got {line!r}")
        try:
            u, v = int(parts[1]), int(parts[2])
        except ValueError:
            raise SgParseError(lineno, "edge endpoints must be integers") from None
        if parts[3] not in SIGNS:
            raise SgParseError(lineno, f"bad sign token {parts[3]!r}; use + or -")
        if u == v:
            raise SgParseError(lineno, f"loop at vertex {u}")
        if not (0 <= u < order and 0 <= v < order):
            raise SgParseError(lineno, f"endpoint out of range 0..{order - 1}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise SgParseError(lineno, f"duplicate edge {key[0]}-{key[1]}")
        seen.add(key)
        edges.append((u, v, SIGNS[parts[3]]))
    if order is None:
        raise SgParseError(1, "missing 'sg <order>' header")
    return make_signed_graph(order, edges)


def serialize_sg(g: SignedGraph) -> str:
    lines = [f"sg {g.order}"]
    for u, v, s in sorted(g.signed_edges()):
        lines.append(f"e {u} {v} {'+' if s > 0 else '-'}")
    return "\n".join(lines) + "\n"


def parse_graph6(data: str | bytes) -> Graph:
    """One unsigned graph from a graph6 string (an optional header is allowed)."""
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[len(b">>graph6<<"):]
    try:
        h = nx.from_graph6_bytes(data)
    except (nx.NetworkXError, ValueError) as exc:
        raise GraphError(f"bad graph6 data: {exc}") from None
    return Graph.from_edges(h.number_of_nodes(), h.edges())


def parse_graph6_lines(text: str) -> list[Graph]:
    return [parse_graph6(line) for line in text.splitlines() if line.strip()]


def to_graph6(h: Graph) -> str:
    """graph6 text for an unsigned graph (signed graphs have no graph6 form)."""
    nxg = nx.Graph()
    nxg.add_nodes_from(range(h.order))
    nxg.add_edges_from(h.edges())
    return nx.to_graph6_bytes(nxg, header=False).decode("ascii").strip()


# -- JSON ----------------------------------------------------------------------

def record_to_json(r: ClassRecord) -> dict[str, Any]:
    return {
        "order": r.order,
        "canonical": r.canonical.hex(),
        "negative_edges": [list(e) for e in r.negative_rep.edges()],
        "charpoly": [str(r.charpoly[i]) for i in range(r.order + 1)],
        "sym_spectrum": r.sym_spectrum,
        "sign_symmetric": r.sign_symmetric,
    }


def report_to_json(rep: EnumReport) -> dict[str, Any]:
    return {
        "order": rep.order,
        "mode": rep.mode,
        "method": rep.method,
        "backend": rep.backend,
        "total_classes": rep.total_classes,
        "sym_spectrum_classes": rep.sym_spectrum_classes,
        "sym_spectrum_classes_mod_negation": rep.sym_spectrum_classes_mod_negation,
        "sign_symmetric_classes": rep.sign_symmetric_classes,
        "elapsed": round(rep.elapsed, 3),
        "classes": [record_to_json(r) for r in rep.records],
    }


def _cell(value: Any) -> str:
    return "true" if value is True else "false" if value is False else str(value)


def record_table(records: list[ClassRecord]) -> list[str]:
    """One row per record carrying the same facts as :func:`record_to_json`."""
    rows = [("#", "canonical", "negative_edges", "charpoly", "sym_spectrum", "sign_symmetric")]
    for i, r in enumerate(records, start=1):
        j = record_to_json(r)
        rows.append(
            (
                str(i),
                j["canonical"],
                " ".join(f"{u}-{v}" for u, v in j["negative_edges"]) or "-",
                " ".join(j["charpoly"]),
                _cell(j["sym_spectrum"]),
                _cell(j["sign_symmetric"]),
            )
        )
    widths = [max(len(row[c]) for row in rows) for c in range(len(rows[0]))]
    return ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows]


def report_text(rep: EnumReport) -> str:
    lines = [
        f"order: {rep.order}",
        f"mode: {rep.mode} (method {rep.method}, backend {rep.backend})",
    ]
    if rep.total_classes is not None:
        lines.append(f"switching classes: {rep.total_classes}")
    lines += [
        f"symmetric spectrum, up to switching isomorphism: {rep.sym_spectrum_classes}",
        f"symmetric spectrum, modulo negation: {rep.sym_spectrum_classes_mod_negation}",
        f"sign-symmetric: {rep.sign_symmetric_classes}",
        f"elapsed: {rep.elapsed:.3f}s",
        "",
    ]
    shown = rep.records if rep.mode == "full" else [r for r in rep.records if r.sym_spectrum]
    lines += record_table(shown)
    return "\n".join(lines) + "\n"
