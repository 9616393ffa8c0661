import pytest
from hypothesis import given, strategies as st

from topgen_oracle import labels as L
from topgen_oracle.errors import LabelSyntaxError, UnknownClass, UnknownFamily

from conftest import CAT, order_p_tuples, counted


@pytest.mark.parametrize("text", ["A1", "~A1", "A1^2", "(A1^3)^(1)", "(~A1)_2", "D4(a1)A1",
                                  "E8(b6)", "~A2A1", "A2~A1", "(C3(a1))_2", "A2^2A1^2", "G2"])
def test_round_trip(text):
    assert L.format_label(L.parse_label(text)) == text


def test_whitespace_is_ignored():
    assert L.parse_label(" A2 A1 ") == L.parse_label("A2A1")


def test_structure():
    lab = L.parse_label("(A1^3)^(1)")
    assert lab.decoration == ("sup", 1)
    assert lab.parts == (L.LabelPart("A", False, 1, 3),)
    assert L.parse_label("D4(a1)").parts[0].inner == ("a", 1)
    assert L.parse_label("(~A1)_3").decoration == ("sub", 3)


@pytest.mark.parametrize("text", ["", "  ", "A", "A0", "1A", "A1)", "(A1)", "(A1^3)^1",
                                  "A1^", "Ã1", "a1", "A1(c1)", "A1,A1"])
def test_syntax_errors(text):
    with pytest.raises(LabelSyntaxError):
        L.parse_label(text)


@pytest.mark.parametrize("text", ["E9", "X3", "F5", "B1", "~Z2"])
def test_unknown_family(text):
    with pytest.raises(UnknownFamily):
        L.parse_label(text)


def test_sort_order_follows_key():
    labs = L.sort_labels(["~A1", "A2", "A1", "A1^2", "(A1^3)^(2)", "(A1^3)^(1)"])
    assert [str(x) for x in labs] == ["A1", "A1^2", "(A1^3)^(1)", "(A1^3)^(2)", "A2", "~A1"]


def test_tau_image(cat):
    assert str(L.tau_image(cat, "G2", 3, "A1")) == "~A1"
    assert str(L.tau_image(cat, "F4", 2, "~A1")) == "A1"
    assert str(L.tau_image(cat, "F4", 2, "(~A1)_2")) == "(~A1)_2"
    assert str(L.tau_image(cat, "F4", 3, "~A1")) == "~A1"  # no graph automorphism here
    with pytest.raises(UnknownClass):
        L.tau_image(cat, "G2", 3, "A2")


def test_canonical_tuple(cat):
    ct = L.canonical_tuple(cat, "F4", 2, ["~A1", "A1", "A1"])
    assert str(ct) == "(A1,A1,~A1)" and ct.t == 3
    # the image (A1,~A1,~A1) is lexicographically larger than (A1,A1,~A1)
    assert str(L.canonical_tuple(cat, "F4", 2, ["A1", "~A1", "~A1"])) == "(A1,A1,~A1)"
    assert str(L.canonical_tuple(cat, "G2", 3, ["~A1", "~A1", "~A1"])) == "(A1,A1,A1)"
    assert str(L.canonical_tuple(cat, "G2", 5, ["~A1", "A1"])) == "(A1,~A1)"


def test_tau_is_an_involution_exhaustive(cat):
    for (g, p), m in cat.tau.items():
        for x, y in m.items():
            assert m[y] == x
            assert cat.is_order_p(g, x, p) == cat.is_order_p(g, y, p)


# -- properties --------------------------------------------------------------------------------

_FAMS = "ABCDEFG"
raw_parts = st.lists(st.tuples(st.integers(0, 6), st.booleans(), st.integers(0, 7),
                               st.integers(1, 8), st.integers(0, 18)), min_size=1, max_size=4)


def build_label(raw, deco):
    ps = []
    for f, tilde, r, power, inner in raw:
        fam = _FAMS[f]
        ranks = list(L.RANKS[fam])
        ps.append(L.LabelPart(fam, tilde, ranks[r % len(ranks)], power,
                              () if inner == 0 else ("ab"[inner % 2], (inner + 1) // 2)))
    d = () if deco == 0 else ("sup" if deco % 2 else "sub", (deco + 1) // 2)
    return L.ClassLabel(tuple(ps), d)


@given(raw_parts, st.integers(0, 24))
@counted
def test_property_parse_format_round_trip(raw, deco):
    lab = build_label(raw, deco)
    text = L.format_label(lab)
    assert L.parse_label(text) == lab
    assert L.format_label(L.parse_label(text)) == text


@given(order_p_tuples(), st.randoms(use_true_random=False))
@counted
def test_property_canonicalization(tup, rnd):
    g, p, labs = tup
    ct = L.canonical_tuple(CAT, g, p, labs)
    # idempotent
    assert L.canonical_tuple(CAT, g, p, ct.labels) == ct
    # invariant under permutation
    shuffled = list(labs)
    rnd.shuffle(shuffled)
    assert L.canonical_tuple(CAT, g, p, shuffled) == ct
    # invariant under the graph automorphism, which is an involution
    img = [L.tau_image(CAT, g, p, x) for x in labs]
    assert L.canonical_tuple(CAT, g, p, img) == ct
    assert [L.tau_image(CAT, g, p, x) for x in img] == list(labs)
