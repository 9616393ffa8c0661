import copy
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from topgen_oracle import bounds as B
from topgen_oracle.errors import MissingBound, NegativeDimension, SizeMismatch, UnknownSubgroup
from topgen_oracle.pcond import REPRESENTATIVE_PRIMES

from conftest import CAT, counted

F = Fraction


# -- fixed_point_dim ------------------------------------------------------------------------

def test_fixed_point_dim_examples():
    assert B.fixed_point_dim(16, 28, 20) == 8
    assert B.fixed_point_dim(16, 9, 9) == 16
    with pytest.raises(NegativeDimension):
        B.fixed_point_dim(15, 28, 10)
    with pytest.raises(NegativeDimension):
        B.fixed_point_dim(16, 4, 5)
    with pytest.raises(NegativeDimension):
        B.fixed_point_dim(-1, 0, 0)


@given(st.integers(0, 300), st.integers(0, 300), st.integers(0, 300))
@counted
def test_fixed_point_dim_property(o, c, i):
    if i > c or o - c + i < 0:
        with pytest.raises(NegativeDimension):
            B.fixed_point_dim(o, c, i)
    else:
        d = B.fixed_point_dim(o, c, i)
        assert d == o - c + i and 0 <= d <= o


# -- alpha -----------------------------------------------------------------------------------

@pytest.mark.parametrize("args, value", [
    (("G2", "A2.2", "A1", 5), F(2, 3)),
    (("F4", "B4", "~A1", 2), F(1, 2)),
    (("F4", "B4", "~A1", 3), F(5, 8)),
    (("E8", "D8", "A4A3", 7), F(3, 16)),
])
def test_alpha_examples(cat, args, value):
    assert B.alpha_bound(cat, *args).value == value


def test_alpha_render_and_errors(cat):
    assert str(B.alpha_bound(cat, "F4", "B4", "~A1", 2)) == "1/2 (upper bound)"
    with pytest.raises(UnknownSubgroup):
        B.alpha_bound(cat, "G2", "C4", "A1", 5)
    with pytest.raises(UnknownSubgroup):
        B.alpha_bound(cat, "E8", "F4", "A4A3", 7)  # F4 is maximal in E8 only at p=3
    with pytest.raises(MissingBound):
        B.alpha_bound(cat, "E8", "B2", "A4A3", 7)


def test_alpha_values_in_unit_interval(cat):
    for r in cat.alpha_rows:
        for p in REPRESENTATIVE_PRIMES:
            assert 0 <= r.value(p) <= 1, r


# -- Sigma -----------------------------------------------------------------------------------

def test_sigma_g2(cat):
    led = B.sigma_bound(cat, "G2", "A1~A1", ["A1", "A1", "~A1"], 5)
    assert led.total == F(5, 4) and led.threshold == 2 and led.below_threshold


def test_sigma_f4_b4_boundary(cat):
    led = B.sigma_bound(cat, "F4", "B4", ["~A1", "B2"], 5)
    assert led.total == 1 and led.threshold == 1 and not led.below_threshold


def test_sigma_long_root_vanishing(cat):
    for h in ("B2", "A1#1", "A2A1.2"):
        led = B.sigma_bound(cat, "E8", h, ["A1", "A1"], 31)
        assert led.entries and all(e[1] == 0 for e in led.entries)


def test_sigma_missing_is_recorded(cat):
    bare = copy.copy(cat)
    bare.alpha_rows = [r for r in cat.alpha_rows if r.subgroup != "*"]
    led = B.sigma_bound(bare, "E8", "B2", ["A1", "A4A3"], 31)
    assert [str(x) for x, *_ in led.entries] == ["A1"]
    assert len(led.missing) == 1 and led.inconclusive and not led.below_threshold
    out = B.generation_certificate(bare, "E8", 31, ["A4A3", "A4A3"])
    assert out.verdict == B.INCONCLUSIVE


# -- criteria --------------------------------------------------------------------------------

def test_weyl_examples(cat):
    assert B.weyl_inequality_test(cat, "F4", 3, ["A1"] * 4).verdict == B.FORCES_EMPTY
    assert B.weyl_inequality_test(cat, "F4", 3, ["~A1", "~A2"]).verdict == B.INCONCLUSIVE
    out = B.weyl_inequality_test(cat, "E8", 31, ["A1", "A1"])
    assert out.verdict == B.FORCES_EMPTY and out.evidence["margin"] > 0


def test_weyl_uses_tau_image(cat):
    # (~A1,~A1,~A1,~A1) in F4 at p=2 only passes after the graph automorphism
    out = B.weyl_inequality_test(cat, "F4", 2, ["~A1"] * 4)
    assert out.verdict == B.FORCES_EMPTY and len(out.evidence["tried"]) == 2


def test_lie_examples(cat):
    out = B.lie_algebra_test(cat, "F4", 3, ["~A1", "~A2"])
    assert out.verdict == B.FORCES_EMPTY
    assert (out.evidence["dim_W"], out.evidence["rhs"]) == (52, 56)
    out = B.lie_algebra_test(cat, "E7", 3, ["(A1^3)^(1)", "A2A1^3"])
    assert out.verdict == B.FORCES_EMPTY
    assert (out.evidence["dim_W"], out.evidence["rhs"]) == (133, 135)
    out = B.lie_algebra_test(cat, "E7", 5, ["(A1^3)^(1)", "(A3A1)^(1)"])
    assert out.verdict == B.INCONCLUSIVE and out.evidence["margin"] == 0
    with pytest.raises(SizeMismatch):
        B.lie_algebra_test(cat, "F4", 3, ["A1"] * 3)


def test_parabolic_examples(cat):
    assert B.parabolic_obstructed(cat, "F4", 3, ["~A1", "~A2"])
    assert B.parabolic_obstructed(cat, "G2", 5, ["A1", "A1", "~A1"]) is None
    assert B.parabolic_obstructed(cat, "E6", 5, ["A1^2", "A2^2"])


def test_certificate_examples(cat):
    out = B.generation_certificate(cat, "G2", 5, ["A1", "A1", "~A1"])
    assert out.verdict == B.FORCES_NONEMPTY and out.evidence["ledgers"]
    out = B.generation_certificate(cat, "F4", 2, ["A1", "~A1"])
    assert out.verdict == B.INCONCLUSIVE and "positive-dimensional" in out.evidence["reason"]
    out = B.generation_certificate(cat, "F4", 3, ["~A1", "B2"])
    assert out.verdict == B.INCONCLUSIVE


def test_sigma_is_exact_rational(cat):
    for s in cat.subgroups("E8", 7):
        if s.kind == "reductive":
            led = B.sigma_bound(cat, "E8", s.label, ["A2", "A4A3"], 7)
            assert isinstance(led.total, Fraction)
