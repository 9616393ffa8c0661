import dataclasses
from functools import lru_cache
from itertools import combinations_with_replacement

import pytest
from hypothesis import given, strategies as st

from topgen_oracle import bounds as B
from topgen_oracle import closure as C
from topgen_oracle import engine as E
from topgen_oracle import labels as L
from topgen_oracle.errors import (DataGap, InvalidInput, NotOrderP, RouteDisagreement,
                                  TupleTooSmall, TwoInvolutionsUnsupported, UnknownClass,
                                  UnknownGroup)
from topgen_oracle.pcond import REPRESENTATIVE_PRIMES

from conftest import CAT, counted, order_p_tuples


def tup(g, p, *xs, extended=False):
    return E.validate_input(CAT, g, p, list(xs), extended=extended)


# -- validate --------------------------------------------------------------------------------

@pytest.mark.parametrize("args, exc", [
    (("G2", 2, ["A1", "A1"]), TwoInvolutionsUnsupported),
    (("E8", 2, ["A1", "A2"]), NotOrderP),
    (("E8", 7, ["A1"]), TupleTooSmall),
    (("E9", 7, ["A1", "A1"]), UnknownGroup),
    (("E8", 9, ["A1", "A1"]), InvalidInput),
    (("G2", 5, ["A1", "B3"]), UnknownClass),
    (("G2", 5, ["A1", "G2"]), NotOrderP),  # the regular class has order p only for p >= 7
    (("G2", 7, ["A1", "G2"]), None),
])
def test_validate_errors(cat, args, exc):
    if exc is None:
        assert E.validate_input(cat, *args).t == 2
    else:
        with pytest.raises(exc):
            E.validate_input(cat, *args)


def test_validate_canonicalizes(cat):
    a = tup("E7", 7, "(A5)^(1)", "A1")
    assert [L.format_label(x) for x in a.labels] == ["A1", "(A5)^(1)"]
    assert tup("G2", 3, "~A1", "~A1") == tup("G2", 3, "A1", "A1")


def test_order_25_class_needs_extended(cat):
    # (A5)^(1) has Jordan blocks of size 6 on the minimal module of E7, so order 25 at p=5
    with pytest.raises(NotOrderP):
        tup("E7", 5, "A1", "(A5)^(1)")
    d = E.decide(cat, tup("E7", 5, "A1", "(A5)^(1)", extended=True), extended=True)
    assert d.verdict == E.EMPTY


# -- routes ----------------------------------------------------------------------------------

def test_tables_examples(cat):
    d = E.decide_tables(cat, tup("E7", 7, "A1", "(A5)^(1)"))
    assert d.verdict == E.EMPTY and d.evidence["table"] == "B"
    d = E.decide_tables(cat, tup("F4", 3, "A1", "A1", "A1", "A1"))
    assert d.verdict == E.EMPTY and d.evidence["table"] == "A"
    assert E.decide_tables(cat, tup("G2", 5, "A1", "A1", "~A1")).verdict == E.NONEMPTY
    d = E.decide_tables(cat, tup("E8", 7, *["A1"] * 5))
    assert d.verdict == E.NONEMPTY and "t >= 5" in d.evidence["reason"]


def test_inequality_examples(cat):
    d = E.decide_inequality(cat, tup("E8", 31, "A1", "A1"))
    assert d.verdict == E.EMPTY and d.evidence["margin"] > 0
    d = E.decide_inequality(cat, tup("F4", 5, "~A1", "B2"))
    assert d.verdict == E.EMPTY and d.evidence["table"] == "B"
    assert E.decide_inequality(cat, tup("G2", 5, "~A1", "~A1")).verdict == E.NONEMPTY


def test_closure_examples(cat):
    d = E.decide_closure(cat, tup("G2", 5, "A1", "A1"))
    assert d.verdict == E.EMPTY and d.evidence["generator_tuple"] == "(A1,G2(a1))"
    d = E.decide_closure(cat, tup("F4", 3, "A2", "A2"))
    assert d.verdict == E.EMPTY and d.evidence["generator_tuple"] == "(A2,A2)"
    assert E.decide_closure(cat, tup("E8", 31, "A4A3", "A4A3")).verdict == E.NONEMPTY


def test_decide_examples(cat):
    assert E.decide(cat, tup("E7", 7, "A1", "(A5)^(1)")).verdict == E.EMPTY
    assert E.decide(cat, tup("G2", 5, "A1", "G2(a1)")).verdict == E.EMPTY
    assert E.decide(cat, tup("G2", 7, "A1", "G2")).verdict == E.NONEMPTY
    assert E.decide(cat, tup("G2", 7, "G2", "G2")).verdict == E.NONEMPTY


def test_route_disagreement_surfaces(cat):
    broken = dataclasses.replace(cat, table_rows=[r for r in cat.table_rows if r.id != "B.F4.1"])
    t = E.validate_input(broken, "F4", 5, ["A1", "~A1", "~A1"])
    # tables and inequality lose the row; the closure generators still cover the tuple
    assert E.decide_tables(broken, t).verdict == E.NONEMPTY
    assert E.decide_closure(broken, t).verdict == E.EMPTY
    with pytest.raises(RouteDisagreement):
        E.decide(broken, t)
    assert "route disagreement" in " ".join(E.decide(broken, t, strict=False).warnings)


def test_explain_ledgers(cat):
    d = E.explain(cat, tup("G2", 5, "A1", "A1", "~A1"))
    crit = d.evidence["criteria"]
    assert crit["certificate"]["verdict"] == B.FORCES_NONEMPTY
    assert {s["subgroup"] for s in crit["sigma"]} >= {"A2.2", "A1~A1"}
    assert all("." not in s["total"] for s in crit["sigma"])


# -- properties ------------------------------------------------------------------------------

@lru_cache(maxsize=None)
def set_views(g, p, t):
    classes = CAT.order_p_classes(g, p)
    return E.table_set(CAT, g, p, t), E.closure_set(CAT, g, p, t, classes)


@given(order_p_tuples())
@counted
def test_property_routes_agree_with_set_views(case):
    g, p, xs = case
    t = E.validate_input(CAT, g, p, xs)
    d = E.decide(CAT, t)  # raises on disagreement
    cn = E.Canon(CAT, g, p)
    table, (dom, unknown) = set_views(g, p, t.t)
    assert (d.verdict == E.EMPTY) == (cn(t.labels) in table and t.t < E.short_circuit_size(g))
    if t.t < E.short_circuit_size(g):
        assert not unknown
        assert (cn(t.labels) in dom) == (d.verdict == E.EMPTY)
    if (g, p) in L.TAU_PAIRS:
        image = [L.tau_image(CAT, g, p, x) for x in xs]
        assert E.decide(CAT, E.validate_input(CAT, g, p, image)).verdict == d.verdict


@given(order_p_tuples(), st.data())
@counted
def test_property_closedness_monotonicity_soundness(case, data):
    g, p, xs = case
    t = E.validate_input(CAT, g, p, xs)
    verdict = E.decide(CAT, t).verdict
    classes = CAT.order_p_classes(g, p)
    if verdict == E.EMPTY:
        i = data.draw(st.integers(0, t.t - 1))
        below = sorted(x for x in C.down_set(CAT, g, t.labels[i], p) if x in classes)
        if below:
            y = data.draw(st.sampled_from(below))
            smaller = list(t.labels[:i]) + [y] + list(t.labels[i + 1:])
            assert E.decide(CAT, E.validate_input(CAT, g, p, smaller)).verdict == E.EMPTY
    else:
        extra = data.draw(st.sampled_from(classes))
        bigger = E.validate_input(CAT, g, p, list(t.labels) + [extra])
        assert E.decide(CAT, bigger).verdict == E.NONEMPTY
    if B.weyl_inequality_test(CAT, g, p, t.labels).verdict == B.FORCES_EMPTY:
        assert verdict == E.EMPTY
    if t.t == 2:
        try:
            if B.lie_algebra_test(CAT, g, p, t.labels).verdict == B.FORCES_EMPTY:
                assert verdict == E.EMPTY
        except DataGap:
            pass
    if B.generation_certificate(CAT, g, p, t.labels).verdict == B.FORCES_NONEMPTY:
        assert verdict == E.NONEMPTY


# -- audit -----------------------------------------------------------------------------------

def test_audit_fast_passes(cat):
    rep = E.audit(cat, primes=E.FAST_PRIMES)
    assert rep.ok and not rep.failures and not rep.gaps
    assert set(rep.checks) >= set("abcdefgh")


def test_inequality_set_matches_brute_force(cat):
    """The pruned search against plain enumeration (t <= 3 for E7 and E8)."""
    for g in ("G2", "F4", "E6", "E7", "E8"):
        for p in REPRESENTATIVE_PRIMES:
            classes = cat.order_p_classes(g, p)
            cn = E.Canon(cat, g, p)
            dim_v = cat.group(g).ref_module_dim
            for t in ((2, 3, 4) if g in ("G2", "F4", "E6") else (2, 3)):
                if t == 2 and p == 2:
                    continue
                brute = set()
                for combo in combinations_with_replacement(classes, t):
                    for v in L.tuple_variants(cat, g, p, combo):
                        if sum(cat.fixed_space_dim(g, x, p) for x in v) > (t - 1) * dim_v:
                            brute.add(cn(combo))
                assert E.inequality_set(cat, g, p, t, classes) == brute, (g, p, t)
