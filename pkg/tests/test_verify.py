from __future__ import annotations

from signsym.constructions import construct_gamma_s, named_instance
from signsym.graph import make_signed_graph, negate
from signsym.verify import CHECK_NAMES, verify_paper


def corrupted_gamma_s(s):
    # move the negative edge 1-4 onto 4-5
    g = construct_gamma_s(s)
    edges = []
    for u, v, sign in g.signed_edges():
        if (u, v) == (0, 3):
            sign = 1
        elif (u, v) == (3, 4):
            sign = -1
        edges.append((u, v, sign))
    return make_signed_graph(g.order, edges)


def test_fresh_build_passes_everything():
    rep = verify_paper()
    assert [c.name for c in rep.checks] == CHECK_NAMES
    assert rep.get("order9-catalog").passed is None
    assert rep.all_passed, [(c.name, c.computed, c.expected) for c in rep.failed]


def test_negated_excep8_is_class_stable():
    names = ["order8-exceptional-class", "named-excep8"]
    plain = verify_paper(only=names)
    flipped = verify_paper(overrides={"excep8": negate(named_instance("excep8"))}, only=names)
    assert [c.passed for c in flipped.checks] == [c.passed for c in plain.checks] == [True, True]


def test_corrupted_gamma_s_is_caught():
    names = ["gamma-s", "gamma-st", "named-excep8", "paley"]
    rep = verify_paper(overrides={"gamma_s": corrupted_gamma_s}, only=names)
    assert rep.get("gamma-s").passed is False
    assert all(rep.get(n).passed for n in names[1:])


def test_crash_becomes_failed_entry():
    def boom(s):
        raise RuntimeError("broken constructor")

    rep = verify_paper(overrides={"gamma_s": boom}, only=["gamma-s"])
    assert rep.checks[0].passed is False and "broken constructor" in rep.checks[0].computed


def test_extended_order9():
    rep = verify_paper(extended=True, only=["order9-catalog"])
    assert rep.checks[0].passed, rep.checks[0].computed
