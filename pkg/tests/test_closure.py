from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from topgen_oracle import closure as C
from topgen_oracle import labels as L
from topgen_oracle.errors import MissingPosetData, SizeMismatch, UnknownClass
from topgen_oracle.pcond import REPRESENTATIVE_PRIMES

from conftest import CAT, GROUPS, counted


@pytest.mark.parametrize("p", [3, 5, 7, 31])
def test_f4_a2a1_below_b2(cat, p):
    assert C.leq(cat, "F4", "A2~A1", "B2", p)


@pytest.mark.parametrize("p", REPRESENTATIVE_PRIMES)
def test_e7_a1sq_below_a1cube_prime(cat, p):
    assert C.leq(cat, "E7", "A1^2", "(A1^3)^(1)", p)


def test_reflexive_and_negative_examples(cat):
    assert C.leq(cat, "G2", "A1", "A1", 5)
    assert not C.leq(cat, "G2", "G2(a1)", "A1", 5)
    assert C.leq(cat, "G2", "A1", "~A1", 5)
    assert not C.leq(cat, "G2", "A1", "~A1", 3)  # the two minimal classes are incomparable
    assert C.leq(cat, "G2", "~A1", "(~A1)_3", 3)


def test_unknown_pair_is_a_data_gap(cat):
    with pytest.raises(MissingPosetData):
        C.leq(cat, "E7", "A1^2", "A1^4", 31)
    with pytest.raises(UnknownClass):
        C.leq(cat, "G2", "A1", "A2", 5)


def test_product_dominated_examples(cat):
    assert C.product_dominated(cat, "G2", 5, ["A1"] * 3, ["A1"] * 3)
    assert C.product_dominated(cat, "G2", 5, ["A1", "A1"], ["A1", "G2(a1)"]) == \
        C.leq(cat, "G2", "A1", "G2(a1)", 5)
    assert not C.product_dominated(cat, "G2", 5, ["G2(a1)", "G2(a1)"], ["A1", "G2(a1)"])
    # via the graph automorphism: (~A1,~A1,~A1) is the image of (A1,A1,A1) at p=3
    assert C.product_dominated(cat, "G2", 3, ["~A1"] * 3, ["A1"] * 3)
    assert not C.product_dominated(cat, "G2", 5, ["~A1"] * 3, ["A1"] * 3)
    with pytest.raises(SizeMismatch):
        C.product_dominated(cat, "G2", 5, ["A1"] * 4, ["A1"] * 3)


def test_partial_order_axioms_exhaustive(cat):
    """Reflexive, antisymmetric, transitive, dimension strictly increasing (known pairs)."""
    for g in GROUPS:
        for p in REPRESENTATIVE_PRIMES:
            cl = cat.classes_at(g, p)
            rel = {(a, b): C.leq3(cat, g, a, b, p) for a in cl for b in cl}
            for a in cl:
                assert rel[a, a] is True
            for (a, b), r in rel.items():
                if r and a != b:
                    assert rel[b, a] is False
                    da, db = C._dim(cat, g, a, p), C._dim(cat, g, b, p)
                    if da is not None and db is not None:
                        assert da < db
                    for c in cl:
                        if rel[b, c]:
                            assert rel[a, c] is True, (g, p, a, b, c)
            assert not C.poset_violations(cat, p)


# -- properties --------------------------------------------------------------------------------

def brute_force(g, p, X, Y):
    """Independent matcher: all bijections, raw X and its image; None if undetermined."""
    variants = [list(X)]
    if (g, p) in L.TAU_PAIRS:
        variants.append([CAT.tau[(g, p)][x] for x in X])
    unknown = False
    for v in variants:
        for perm in permutations(range(len(Y))):
            vals = [C.leq3(CAT, g, v[i], Y[perm[i]], p) for i in range(len(v))]
            if all(r is True for r in vals):
                return True
            unknown |= any(r is None for r in vals) and not any(r is False for r in vals)
    return None if unknown else False


@st.composite
def dominance_cases(draw):
    g = draw(st.sampled_from(GROUPS))
    p = draw(st.sampled_from(REPRESENTATIVE_PRIMES))
    t = draw(st.integers(1, 5))
    cl = CAT.order_p_classes(g, p)
    Y = [cl[draw(st.integers(0, len(cl) - 1))] for _ in range(t)]
    X = []
    for y in Y:  # mostly pick X_i below some Y_j so that true cases are common
        below = sorted(C.down_set(CAT, g, y, p) & set(cl), key=L.ClassLabel.key) + [y]
        X.append(draw(st.sampled_from(below)) if draw(st.booleans()) else
                 cl[draw(st.integers(0, len(cl) - 1))])
    return g, p, draw(st.permutations(X)), Y


@given(dominance_cases())
@counted
def test_property_matching_equals_brute_force_and_is_monotone(case):
    g, p, X, Y = case
    expected = brute_force(g, p, X, Y)
    try:
        got = C.product_dominated(CAT, g, p, X, Y)
    except MissingPosetData:
        got = None
    if expected is not None:
        assert got == expected
    else:
        assert got in (None, True)
    assert C.product_dominated(CAT, g, p, Y, Y)
    if got:
        # monotone: shrinking any member keeps a true result
        for i, x in enumerate(X):
            for z in C.down_set(CAT, g, x, p):
                if CAT.is_order_p(g, z, p):
                    assert C.product_dominated(CAT, g, p, X[:i] + [z] + X[i + 1:], Y)
