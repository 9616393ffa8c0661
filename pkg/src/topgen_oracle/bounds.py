"""Dimension bounds: fixed-point spaces, alpha/Sigma ledgers and the three criteria.

Every quantity here is an exact integer or Fraction.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from . import labels as L
from .errors import (MissingBound, MissingData, NegativeDimension, SizeMismatch,
                     UnknownSubgroup)

FORCES_EMPTY = "ForcesEmpty"
FORCES_NONEMPTY = "ForcesNonEmpty"
INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class AlphaValue:
    value: Fraction
    exact: bool
    kind: str  # exact | upper | strict
    provenance: str

    def __str__(self):
        return f"{_q(self.value)} ({'exact' if self.exact else self.kind + ' bound'})"


@dataclass
class SigmaLedger:
    group: str
    subgroup: str
    p: int
    entries: list = field(default_factory=list)  # (label, value, kind, provenance)
    missing: list = field(default_factory=list)  # labels with no usable bound
    threshold: int = 1

    @property
    def total(self):
        return sum((e[1] for e in self.entries), Fraction(0))

    @property
    def inconclusive(self):
        return bool(self.missing)

    @property
    def below_threshold(self):
        """Sigma < t-1 is established (a strict term lets the boundary case through)."""
        if self.missing:
            return False
        tot = self.total
        return tot < self.threshold or (tot == self.threshold and
                                        any(e[2] == "strict" for e in self.entries))

    def as_dict(self):
        return {"subgroup": self.subgroup, "total": _q(self.total), "threshold": self.threshold,
                "terms": [{"class": L.format_label(x), "alpha": _q(v), "kind": k, "source": s}
                          for x, v, k, s in self.entries],
                "missing": [L.format_label(x) for x in self.missing],
                "below_threshold": self.below_threshold}


@dataclass
class CriterionOutcome:
    verdict: str
    criterion: str
    evidence: dict = field(default_factory=dict)

    def as_dict(self):
        return {"criterion": self.criterion, "verdict": self.verdict, **self.evidence}


def _q(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def fixed_point_dim(dim_omega, dim_class, dim_intersection):
    """dim C_Omega(y) = dim Omega - dim y^G + dim(y^G cap H)."""
    if min(dim_omega, dim_class, dim_intersection) < 0:
        raise NegativeDimension("dimensions must be non-negative")
    if dim_intersection > dim_class:
        raise NegativeDimension(f"dim(y^G cap H)={dim_intersection} exceeds dim y^G={dim_class}")
    d = dim_omega - dim_class + dim_intersection
    if d < 0:
        raise NegativeDimension(f"{dim_omega} - {dim_class} + {dim_intersection} = {d} < 0")
    return d


# -- alpha -------------------------------------------------------------------------------------

def _row(cat, group, sub, cls):
    for r in cat.alpha_rows:
        if r.group == group and r.subgroup == sub and r.cls == cls:
            return r
    return None


def _evaluate(row, p):
    v = row.value(p)
    kind = row.exact
    if kind == "strict-unless-delta":
        kind = "upper" if p == row.delta_prime else "strict"
    return AlphaValue(v, kind == "exact", kind, row.provenance)


def alpha_bound(cat, group, subgroup, label, p):
    """Tabulated bound on alpha(G,H,y); blank cells raise MissingBound."""
    sub = cat.subgroup(group, subgroup)
    if not sub.p_condition.admits(p, group):
        raise UnknownSubgroup(f"{subgroup} is not a maximal subgroup of {group} at p={p}")
    label = cat.require_class(group, label).label
    row = _row(cat, group, subgroup, label)
    if row is None:
        raise MissingBound(f"no tabulated alpha for ({group}, {subgroup}, "
                           f"{L.format_label(label)})")
    return _evaluate(row, p)


def alpha_for_sigma(cat, group, subgroup, label, p):
    """Bound used in Sigma: tabulated row, else the long-root vanishing, else a general row."""
    try:
        return alpha_bound(cat, group, subgroup, label, p)
    except MissingBound:
        pass
    sub = cat.subgroup(group, subgroup)
    if sub.kind == "reductive" and not sub.in_long_collection and label == _A1:
        return AlphaValue(Fraction(0), True, "exact", "long-root-elements")
    for key in (label, "*"):
        row = _row(cat, group, "*", key)
        if row is not None:
            return _evaluate(row, p)
    raise MissingBound(f"no bound for ({group}, {subgroup}, {L.format_label(label)})")


_A1 = L.parse_label("A1")


def sigma_bound(cat, group, subgroup, tup, p=None):
    """Ledger of alpha values for a tuple; unusable entries are recorded, not raised."""
    if isinstance(tup, L.CanonicalTuple):
        p, labels = tup.p, tup.labels
    else:
        labels = tuple(cat.require_class(group, x).label for x in tup)
    ledger = SigmaLedger(group, subgroup, p, threshold=len(labels) - 1)
    for x in labels:
        try:
            a = alpha_for_sigma(cat, group, subgroup, x, p)
        except MissingBound:
            ledger.missing.append(x)
            continue
        ledger.entries.append((x, a.value, a.kind, a.provenance))
    return ledger


# -- criteria ----------------------------------------------------------------------------------

def _weyl_margin(cat, group, p, labels):
    dim_v = cat.group(group).ref_module_dim
    fixed = [cat.fixed_space_dim(group, x, p) for x in labels]
    return sum(fixed) - (len(labels) - 1) * dim_v, fixed


def weyl_inequality_test(cat, group, p, labels):
    """Sum of fixed-space dimensions on V against (t-1) dim V, on the tuple and its tau-image."""
    labels = [cat.require_class(group, x).label for x in labels]
    tried = []
    for variant in L.tuple_variants(cat, group, p, labels):
        margin, fixed = _weyl_margin(cat, group, p, variant)
        tried.append({"tuple": _fmt(variant), "fixed_dims": fixed, "margin": margin})
        if margin > 0:
            return CriterionOutcome(FORCES_EMPTY, "weyl", {"margin": margin, "tried": tried,
                                                           "dim_V": cat.group(group).ref_module_dim})
    return CriterionOutcome(INCONCLUSIVE, "weyl", {"margin": tried[0]["margin"], "tried": tried,
                                                   "dim_V": cat.group(group).ref_module_dim})


def lie_algebra_test(cat, group, p, labels):
    """dim W < rank + sum dim C_W(y_i) - dim Z forces emptiness for pairs."""
    if len(labels) != 2:
        raise SizeMismatch("the Lie-algebra criterion applies to pairs")
    labels = [cat.require_class(group, x).label for x in labels]
    g = cat.group(group)
    z = g.dim_center.at(p, group)
    if z is None:
        raise MissingData("dim_center", f"{group} at p={p}")
    fixed = [cat.fixed_space_dim_adjoint(group, x, p) for x in labels]
    rhs = g.rank + sum(fixed) - z
    ev = {"dim_W": g.adjoint_dim, "rank": g.rank, "fixed_dims": fixed, "dim_Z": z, "rhs": rhs,
          "margin": rhs - g.adjoint_dim}
    return CriterionOutcome(FORCES_EMPTY if g.adjoint_dim < rhs else INCONCLUSIVE, "lie", ev)


def _matches(cat, group, p, labels, rows):
    variants = L.tuple_variants(cat, group, p, labels)
    for r in rows:
        if r.group == group and r.p_condition.admits(p, group) and tuple(r.labels) in variants:
            return r
    return None


def parabolic_obstructed(cat, group, p, labels):
    """Whether some maximal parabolic can have Sigma >= t-1 (returns the reason or None)."""
    labels = tuple(L.sort_labels(cat.require_class(group, x).label for x in labels))
    if weyl_inequality_test(cat, group, p, labels).verdict == FORCES_EMPTY:
        return "inequality"
    row = _matches(cat, group, p, labels, cat.parabolic_rows)
    if row is not None:
        return f"case {row.table}: {row.render()}"
    return None


def delta_plus_empty(group, p, labels):
    return ((group, p) in L.TAU_PAIRS and len(labels) == 2 and
            {L.format_label(x) for x in labels} == {"A1", "~A1"})


def generation_certificate(cat, group, p, labels):
    labels = tuple(L.sort_labels(cat.require_class(group, x).label for x in labels))
    if delta_plus_empty(group, p, labels):
        return CriterionOutcome(INCONCLUSIVE, "certificate",
                                {"reason": "the positive-dimensional part of Delta is empty "
                                           "for this pair"})
    try:
        obstructed = parabolic_obstructed(cat, group, p, labels)
    except MissingData as exc:
        return CriterionOutcome(INCONCLUSIVE, "certificate", {"reason": str(exc)})
    if obstructed:
        return CriterionOutcome(INCONCLUSIVE, "certificate",
                                {"reason": f"parabolic obstruction ({obstructed})"})
    ledgers = []
    for sub in cat.subgroups(group, p):
        if sub.kind != "reductive":
            continue
        led = sigma_bound(cat, group, sub.label, labels, p)
        ledgers.append(led.as_dict())
        if not led.below_threshold:
            why = "missing bound" if led.inconclusive else f"Sigma = {_q(led.total)}"
            return CriterionOutcome(INCONCLUSIVE, "certificate",
                                    {"reason": f"{why} at H = {sub.label}",
                                     "failing_subgroup": sub.label, "ledgers": ledgers})
    return CriterionOutcome(FORCES_NONEMPTY, "certificate", {"ledgers": ledgers})


def _fmt(xs):
    return "(" + ",".join(L.format_label(x) for x in xs) + ")"
