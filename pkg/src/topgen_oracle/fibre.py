"""Dimension identities dim M = sum dim D_i + dim G - sum dim C_i behind the Table B proofs."""

from dataclasses import dataclass

from . import labels as L
from .pcond import REPRESENTATIVE_PRIMES


@dataclass(frozen=True)
class FibreInstance:
    group: str
    p_condition: object
    L: str
    M: str
    dim_M: int
    X: tuple  # class labels
    C: tuple  # their dimensions in G
    D: tuple  # dimensions of the matching classes in M
    dim_G: int
    flags: tuple
    provenance: str

    @property
    def t(self):
        return len(self.X)

    def render(self):
        return (f"{self.group} {self.L}<{self.M}: (" +
                ",".join(L.format_label(x) for x in self.X) + ")")


def check_fibre_instance(inst):
    """(holds, residual) where residual = sum D + dim G - sum C - dim M."""
    residual = sum(inst.D) + inst.dim_G - sum(inst.C) - inst.dim_M
    return residual == 0, residual


def _witness_prime(row, group):
    for p in REPRESENTATIVE_PRIMES:
        if row.p_condition.admits(p, group):
            return p
    return None


def list_fibre_instances(cat):
    """Instances with class dimensions resolved from the catalog at an admitted prime."""
    out = []
    for row in cat.fibre_rows:
        p = _witness_prime(row, row.group)
        C = tuple(cat.dim_class(row.group, x, p) for x in row.X)
        out.append(FibreInstance(row.group, row.p_condition, row.L, row.M, row.dim_M, row.X, C,
                                 row.D, cat.group(row.group).dim_G, row.flags, row.provenance))
    return out


def fibre_dim_consistency(cat):
    """Class dimensions must not move across the primes an instance covers."""
    bad = []
    for row in cat.fibre_rows:
        for x in row.X:
            dims = {cat.dim_class(row.group, x, p) for p in REPRESENTATIVE_PRIMES
                    if row.p_condition.admits(p, row.group)}
            if len(dims) > 1:
                bad.append(f"{row.group} {L.format_label(x)} has dims {sorted(dims)} "
                           f"under {row.p_condition}")
    return bad
