from __future__ import annotations

import json

import pytest
from hypothesis import given

from conftest import signed_graphs, unsigned_graphs
from signsym.enumerate import count_report
from signsym.graph import GraphError, make_signed_graph
from signsym.io import (
    SgParseError,
    parse_graph6,
    parse_graph6_lines,
    parse_sg,
    record_table,
    record_to_json,
    report_to_json,
    serialize_sg,
    to_graph6,
)


def test_parse_examples():
    assert parse_sg("sg 2\ne 0 1 +") == make_signed_graph(2, [(0, 1, 1)])
    text = "# a comment\nsg 3\n\ne 2 0 -\n# another\ne 0 1 +\n"
    g = parse_sg(text)
    assert serialize_sg(g) == "sg 3\ne 0 1 +\ne 0 2 -\n"


@pytest.mark.parametrize(
    "text, line, fragment",
    [
        ("sg 2\ne 0 0 +", 2, "loop"),
        ("sg 3\ne 0 1 +\ne 1 0 -", 3, "duplicate"),
        ("sg 2\ne 0 1 *", 2, "sign"),
        ("sg 2\nf 0 1 +", 2, "expected"),
        ("graph 2", 1, "header"),
        ("sg x", 1, "integer"),
        ("sg 2\ne 0 5 +", 2, "range"),
        ("# only comments", 1, "missing"),
    ],
)
def test_parse_errors(text, line, fragment):
    with pytest.raises(SgParseError, match=fragment) as info:
        parse_sg(text)
    assert info.value.line == line
    assert str(info.value).startswith(f"line {line}:")


@given(signed_graphs(max_order=9))
def test_round_trip(g):
    text = serialize_sg(g)
    assert parse_sg(text) == g
    assert serialize_sg(parse_sg(text)) == text


@given(unsigned_graphs(max_order=12))
def test_graph6_round_trip(h):
    assert parse_graph6(to_graph6(h)) == h
    assert parse_graph6(">>graph6<<" + to_graph6(h)) == h


def test_graph6_large_and_errors():
    from signsym.graph import Graph

    big = Graph.from_edges(62, [(i, j) for i in range(62) for j in range(i + 1, 62) if (i * j) % 5 == 1])
    assert parse_graph6(to_graph6(big)) == big
    assert parse_graph6_lines("Ch\nC~\n")[1].size == 6
    with pytest.raises(GraphError):
        parse_graph6("C~~~~~~~")


def test_json_schema_and_table_agree():
    rep = count_report(6)
    data = report_to_json(rep)
    json.loads(json.dumps(data))
    assert data["total_classes"] == 16
    rows = record_table(rep.records)[1:]
    assert len(rows) == len(data["classes"]) == 16
    for row, rec, r in zip(rows, data["classes"], rep.records):
        assert set(rec) == {"order", "canonical", "negative_edges", "charpoly", "sym_spectrum", "sign_symmetric"}
        assert all(isinstance(c, str) and int(c) == r.charpoly[i] for i, c in enumerate(rec["charpoly"]))
        assert rec == record_to_json(r)
        cells = row.split()
        assert rec["canonical"] in cells
        assert " ".join(rec["charpoly"]) in row
        assert cells[-2:] == [str(rec["sym_spectrum"]).lower(), str(rec["sign_symmetric"]).lower()]
