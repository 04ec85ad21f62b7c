from __future__ import annotations

from itertools import combinations

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from signsym.graph import Graph, SignedGraph, SignedPermutation, make_signed_graph

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@st.composite
def signed_graphs(draw, min_order: int = 1, max_order: int = 7) -> SignedGraph:
    n = draw(st.integers(min_order, max_order))
    pairs = list(combinations(range(n), 2))
    signs = draw(st.lists(st.sampled_from((0, 1, -1)), min_size=len(pairs), max_size=len(pairs)))
    return make_signed_graph(n, [(u, v, s) for (u, v), s in zip(pairs, signs) if s])


@st.composite
def complete_signed_graphs(draw, min_order: int = 2, max_order: int = 8) -> SignedGraph:
    n = draw(st.integers(min_order, max_order))
    pairs = list(combinations(range(n), 2))
    signs = draw(st.lists(st.sampled_from((1, -1)), min_size=len(pairs), max_size=len(pairs)))
    return make_signed_graph(n, [(u, v, s) for (u, v), s in zip(pairs, signs)])


@st.composite
def unsigned_graphs(draw, min_order: int = 1, max_order: int = 6) -> Graph:
    n = draw(st.integers(min_order, max_order))
    pairs = list(combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, k in zip(pairs, keep) if k])


def subsets(n: int):
    return st.sets(st.integers(0, n - 1))


@st.composite
def signed_permutations(draw, n: int):
    perm = draw(st.permutations(range(n)))
    flip = draw(st.lists(st.sampled_from((1, -1)), min_size=n, max_size=n))
    return SignedPermutation(tuple(perm), tuple(flip))


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def pytest_addoption(parser):
    parser.addoption("--extended", action="store_true", help="run the minutes-scale order-9 mask scan")


def pytest_collection_modifyitems(config, items):
    import pytest

    if config.getoption("--extended"):
        return
    skip = pytest.mark.skip(reason="extended run; pass --extended")
    for item in items:
        if "extended" in item.keywords:
            item.add_marker(skip)
