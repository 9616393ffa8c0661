import dataclasses

import pytest

from topgen_oracle import engine as E
from topgen_oracle.errors import InvalidInput
from topgen_oracle.fibre import check_fibre_instance, fibre_dim_consistency, list_fibre_instances
from topgen_oracle.pcond import REPRESENTATIVE_PRIMES

from conftest import CAT

INSTANCES = list_fibre_instances(CAT)


def find(group, M, X):
    for i in INSTANCES:
        if i.group == group and i.M == M and i.render().endswith(X):
            return i
    raise LookupError(X)


@pytest.mark.parametrize("inst", INSTANCES, ids=lambda i: i.render())
def test_every_instance_has_zero_residual(inst):
    assert check_fibre_instance(inst) == (True, 0)


@pytest.mark.parametrize("group, M, X, D, C, target", [
    ("F4", "B4", "(A1,~A1,~A1)", (12, 16, 16), (16, 22, 22), 36),
    ("F4", "C4", "(~A1,(~A1)_2,(~A1)_2)", (12, 16, 16), (16, 22, 22), 36),
    ("F4", "A1C3", "(~A1,~A2)", (10, 14), (22, 30), 24),
    ("E7", "A1D6", "(A1,(A1^3)^(1),(A1^3)^(1))", (18, 30, 30), (34, 54, 54), 69),
    ("E6", "A1A5", "(A1^2,A2^2)", (16, 24), (32, 48), 38),
])
def test_printed_identities(group, M, X, D, C, target):
    inst = find(group, M, X)
    assert (inst.D, inst.C, inst.dim_M) == (D, C, target)


@pytest.mark.parametrize("X, sums", [
    ("(A1,A1,A3)", (152, 264)),
    ("(A1,D5)", (146, 258)),
    ("(A1,D4A2)", (144, 256)),
])
def test_e8_totals(X, sums):
    inst = find("E8", "A1E7", X)
    assert (sum(inst.D), sum(inst.C)) == sums
    assert sum(inst.D) + inst.dim_G - sum(inst.C) == 136


def test_perturbed_instance_fails():
    inst = dataclasses.replace(find("E8", "A1E7", "(A1,A1,A3)"), dim_M=137)
    assert check_fibre_instance(inst) == (False, -1)


def test_f4_has_at_least_four_instances():
    assert sum(i.group == "F4" for i in INSTANCES) >= 4


def test_modified_argument_flags():
    flagged = {i.render() for i in INSTANCES if "M-classes" in i.flags}
    assert flagged == {"E7 D6<A1D6: ((A1^3)^(1),A2A1^3)", "E8 E7<A1E7: (A1,D4A2)"}


def test_dims_match_catalog():
    assert fibre_dim_consistency(CAT) == []
    for inst in INSTANCES:
        p = next(p for p in REPRESENTATIVE_PRIMES if inst.p_condition.admits(p, inst.group))
        assert inst.C == tuple(CAT.dim_class(inst.group, x, p) for x in inst.X)


def test_table_b_instances_decide_empty():
    b_rows = {(r.group, r.labels) for r in CAT.tables("B")}
    checked = 0
    for inst in INSTANCES:
        if (inst.group, tuple(inst.X)) not in b_rows:
            continue
        for p in REPRESENTATIVE_PRIMES:
            if not inst.p_condition.admits(p, inst.group):
                continue
            try:
                t = E.validate_input(CAT, inst.group, p, list(inst.X))
            except InvalidInput:
                continue  # outside the order-p range
            assert E.decide(CAT, t).verdict == E.EMPTY
            checked += 1
    assert checked > 50
