"""Decision routes (tables, inequality, closure), their consensus, and the dataset audit."""

import time
from fractions import Fraction
from dataclasses import dataclass, field
from itertools import combinations_with_replacement, product
from math import comb

from . import bounds as B
from . import closure as C
from . import labels as L
from .errors import (DataGap, InvalidInput, MissingData, MissingPosetData, NotOrderP,
                     RouteDisagreement, TupleTooSmall, TwoInvolutionsUnsupported, UnknownGroup)
from .fibre import check_fibre_instance, fibre_dim_consistency, list_fibre_instances
from .pcond import REPRESENTATIVE_PRIMES, is_prime

EMPTY, NONEMPTY = "Empty", "NonEmpty"
FAST_PRIMES = (2, 3, 5, 7, 31)


@dataclass
class Decision:
    verdict: str
    route: str
    evidence: dict = field(default_factory=dict)
    warnings: list = field(default_factory=list)


# -- input ---------------------------------------------------------------------------------

def short_circuit_size(group):
    return 4 if group == "G2" else 5


def _extended_row(cat, group, p, labels):
    if len(labels) < 2:
        return None
    try:
        return _row_match(cat, group, p, labels, cat.tables("X"))
    except DataGap:
        return None


def validate_input(cat, group, p, labels, extended=False):
    if group not in cat.groups:
        raise UnknownGroup(f"unknown group {group!r}")
    if not isinstance(p, int) or not is_prime(p):
        raise InvalidInput(f"p={p} is not a prime")
    labels = [cat.require_class(group, x).label for x in labels]
    if len(labels) < 2:
        raise TupleTooSmall("a tuple needs at least two classes")
    if extended and _extended_row(cat, group, p, labels) is not None:
        return L.CanonicalTuple(group, p, tuple(L.sort_labels(labels)))
    for x in labels:
        if not cat.is_order_p(group, x, p):
            raise NotOrderP(L.format_label(x), p)
    if len(labels) == 2 and p == 2:
        raise TwoInvolutionsUnsupported(
            "two involutions generate a dihedral group, so pairs are excluded at p=2")
    return L.canonical_tuple(cat, group, p, labels)


# -- routes --------------------------------------------------------------------------------

def _row_match(cat, group, p, labels, rows):
    variants = L.tuple_variants(cat, group, p, labels)
    for r in rows:
        if r.group == group and r.p_condition.admits(p, group) and r.labels in variants:
            return r
    return None


def _table_rows(cat, extended):
    rows = cat.tables("A") + cat.tables("B")
    return rows + cat.tables("X") if extended else rows


def decide_tables(cat, tup, extended=False):
    if tup.t >= short_circuit_size(tup.group):
        return Decision(NONEMPTY, "tables", {"reason": f"t >= {short_circuit_size(tup.group)}"})
    row = _row_match(cat, tup.group, tup.p, tup.labels, _table_rows(cat, extended))
    if row is not None:
        return Decision(EMPTY, "tables", {"table": row.table, "row": row.id,
                                          "tuple": row.render(),
                                          "p_condition": str(row.p_condition)})
    return Decision(NONEMPTY, "tables", {"reason": "no table row matches"})


def decide_inequality(cat, tup, extended=False):
    special = cat.tables("B") + (cat.tables("X") if extended else [])
    row = _row_match(cat, tup.group, tup.p, tup.labels, special)
    if row is not None:
        return Decision(EMPTY, "inequality", {"table": row.table, "row": row.id,
                                              "tuple": row.render()})
    out = B.weyl_inequality_test(cat, tup.group, tup.p, tup.labels)
    verdict = EMPTY if out.verdict == B.FORCES_EMPTY else NONEMPTY
    return Decision(verdict, "inequality", out.evidence)


def decide_closure(cat, tup, extended=False):
    rows = cat.clos_rows + (cat.tables("X") if extended else [])
    gaps = []
    for r in rows:
        if r.group != tup.group or len(r.labels) != tup.t or not r.p_condition.admits(tup.p,
                                                                                        tup.group):
            continue
        try:
            w = C.find_domination(cat, tup.group, tup.p, tup.labels, r.labels)
        except DataGap as exc:
            gaps.append(str(exc))
            continue
        if w is not None:
            return Decision(EMPTY, "closure", {"generator": r.id, "generator_tuple": r.render(),
                                               "matching": [[L.format_label(x), L.format_label(y)]
                                                            for x, y in zip(*w)]})
    if gaps:
        raise MissingPosetData("; ".join(gaps))
    return Decision(NONEMPTY, "closure", {"reason": "no generator of this size dominates"})


ROUTES = {"tables": decide_tables, "inequality": decide_inequality, "closure": decide_closure}


def decide(cat, tup, extended=False, strict=True):
    """Tables verdict, cross-checked by the other routes; conflicts raise unless strict=False."""
    main = decide_tables(cat, tup, extended)
    evidence = {"tables": main.evidence}
    warnings = []
    verdicts = {"tables": main.verdict}
    for name in ("inequality", "closure"):
        try:
            d = ROUTES[name](cat, tup, extended)
        except DataGap as exc:
            warnings.append(f"{name} route unavailable: {exc}")
            continue
        verdicts[name] = d.verdict
        evidence[name] = d.evidence
    if len(set(verdicts.values())) > 1:
        if strict:
            raise RouteDisagreement(verdicts)
        warnings.append(f"route disagreement: {verdicts}")
    return Decision(main.verdict, "tables", evidence, warnings)


def explain(cat, tup, extended=False):
    """decide() plus every criterion outcome and per-subgroup Sigma ledger."""
    d = decide(cat, tup, extended, strict=False)
    g, p, labels = tup.group, tup.p, tup.labels
    crit = {}
    for name, fn in (("weyl", B.weyl_inequality_test), ("lie", B.lie_algebra_test),
                     ("certificate", B.generation_certificate)):
        if name == "lie" and tup.t != 2:
            continue
        try:
            crit[name] = fn(cat, g, p, labels).as_dict()
        except DataGap as exc:
            crit[name] = {"verdict": "Unavailable", "reason": str(exc)}
    try:
        crit["parabolic_obstruction"] = B.parabolic_obstructed(cat, g, p, labels)
    except DataGap as exc:
        crit["parabolic_obstruction"] = f"unavailable: {exc}"
    crit["sigma"] = [B.sigma_bound(cat, g, s.label, labels, p).as_dict()
                     for s in cat.subgroups(g, p) if s.kind == "reductive"]
    d.evidence["criteria"] = crit
    return d


# -- set-level views used by the audit -----------------------------------------------------

class Canon:
    """Fast canonical forms for tuples of one (group, p)."""

    def __init__(self, cat, group, p):
        self.group, self.p = group, p
        self.tau = cat.tau.get((group, p), {}) if (group, p) in L.TAU_PAIRS else None

    def __call__(self, labels):
        a = tuple(sorted(labels, key=L.ClassLabel.key))
        if self.tau is None:
            return a
        b = tuple(sorted((self.tau[x] for x in labels), key=L.ClassLabel.key))
        return min(a, b, key=lambda xs: tuple(x.key() for x in xs))

    def image(self, labels):
        if self.tau is None:
            return tuple(labels)
        return tuple(self.tau[x] for x in labels)


def table_set(cat, group, p, t, which=("A", "B")):
    cn = Canon(cat, group, p)
    out = {}
    for w in which:
        for r in cat.tables(w):
            if r.group == group and len(r.labels) == t and r.p_condition.admits(p, group):
                out[cn(r.labels)] = r
    return out


def inequality_set(cat, group, p, t, classes):
    """Tuples (of the given order-p classes) whose Weyl margin is positive, by pruned search."""
    dim_v = cat.group(group).ref_module_dim
    need = (t - 1) * dim_v
    f = sorted(((cat.fixed_space_dim(group, x, p), x) for x in classes),
               key=lambda e: (-e[0], e[1].key()))
    hits = []

    def rec(start, chosen, total):
        k = t - len(chosen)
        if k == 0:
            if total > need:
                hits.append(tuple(chosen))
            return
        for i in range(start, len(f)):
            fi, x = f[i]
            if total + k * fi <= need:
                break  # values only decrease from here on
            rec(i, chosen + [x], total + fi)

    rec(0, [], 0)
    cn = Canon(cat, group, p)
    out = set()
    for h in hits:
        out.add(cn(h))
        out.add(cn(cn.image(h)))
    return out


def closure_set(cat, group, p, t, classes):
    """Tuples dominated by a generator, plus tuples whose status hinges on unknown pairs."""
    cn = Canon(cat, group, p)
    dominated, unknown = set(), set()
    for r in cat.clos_rows:
        if r.group != group or len(r.labels) != t or not r.p_condition.admits(p, group):
            continue
        sure, maybe = [], []
        for y in r.labels:
            s = [x for x in classes if C.leq3(cat, group, x, y, p) is True]
            m = [x for x in classes if C.leq3(cat, group, x, y, p) is None]
            sure.append(s)
            maybe.append(s + m)
        for combo in product(*sure):
            dominated.add(cn(combo))
            dominated.add(cn(cn.image(combo)))
        if any(len(m) > len(s) for s, m in zip(sure, maybe)):
            for combo in product(*maybe):
                unknown.add(cn(combo))
    return dominated, unknown - dominated


# -- audit ---------------------------------------------------------------------------------

@dataclass
class AuditReport:
    checks: dict = field(default_factory=dict)  # name -> number of assertions
    failures: list = field(default_factory=list)
    gaps: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    domain_size: int = 0
    elapsed: float = 0.0

    @property
    def ok(self):
        return not self.failures

    def tick(self, name, n=1):
        self.checks[name] = self.checks.get(name, 0) + n

    def fail(self, name, msg):
        self.failures.append(f"({name}) {msg}")


def _fmt(xs):
    return "(" + ",".join(L.format_label(x) for x in xs) + ")"


def audit(cat, primes=REPRESENTATIVE_PRIMES, sizes=(2, 3, 4)):
    rep = AuditReport()
    t0 = time.perf_counter()
    for g in cat.groups:
        for p in primes:
            classes = cat.order_p_classes(g, p)
            cn = Canon(cat, g, p)
            for t in sizes:
                if t == 2 and p == 2:
                    continue
                rep.domain_size += comb(len(classes) + t - 1, t)
                _audit_block(cat, rep, g, p, t, classes, cn)
            _audit_lie(cat, rep, g, p, classes)
    for p in primes:
        rep.tick("poset")
        for msg in C.poset_violations(cat, p):
            rep.fail("poset", msg)
    _audit_tables(cat, rep, primes)
    _audit_tau(cat, rep)
    _audit_fibre(cat, rep, primes)
    _audit_table5(cat, rep)
    _audit_alpha(cat, rep, primes)
    rep.elapsed = time.perf_counter() - t0
    return rep


def _audit_block(cat, rep, g, p, t, classes, cn):
    tab = table_set(cat, g, p, t)
    tab_a = table_set(cat, g, p, t, ("A",))
    tab_b = table_set(cat, g, p, t, ("B",))
    if t >= short_circuit_size(g):
        tab = {}
    try:
        ineq = inequality_set(cat, g, p, t, classes)
    except MissingData as exc:
        rep.gaps.append(f"{g} p={p} t={t}: inequality route: {exc}")
        ineq = None
    clos, unknown = closure_set(cat, g, p, t, classes)
    for u in sorted(unknown, key=lambda xs: tuple(x.key() for x in xs)):
        rep.gaps.append(f"{g} p={p}: closure status of {_fmt(u)} undetermined")
    tabset = set(tab)
    # (a) route agreement
    rep.tick("a")
    if ineq is not None:
        ineq_route = ineq | set(tab_b)
        for x in tabset ^ ineq_route:
            rep.fail("a", f"{g} p={p} {_fmt(x)}: tables={x in tabset} inequality={x in ineq_route}")
    for x in (tabset ^ clos) - unknown:
        rep.fail("a", f"{g} p={p} {_fmt(x)}: tables={x in tabset} closure={x in clos}")
    # (b) Table A rows are exactly the inequality cases
    if ineq is not None:
        rep.tick("b")
        for x in set(tab_a) ^ ineq:
            rep.fail("b", f"{g} p={p} {_fmt(x)}: Table A={x in tab_a} inequality={x in ineq}")
        # (c) Table B rows fail the inequality
        for x, r in tab_b.items():
            rep.tick("c")
            if x in ineq:
                rep.fail("c", f"{r.id} satisfies the inequality at p={p}")
    # (d) downward closure and monotonicity in t
    classset = set(classes)
    for x in tabset:
        for i, xi in enumerate(x):
            for z in C.down_set(cat, g, xi, p):
                if z in classset:
                    rep.tick("d")
                    y = cn(x[:i] + (z,) + x[i + 1:])
                    if y not in tabset:
                        rep.fail("d", f"{g} p={p}: {_fmt(x)} Empty but smaller {_fmt(y)} is not")
        if t > 2 and not (t == 3 and p == 2):
            smaller = set(table_set(cat, g, p, t - 1))
            for i in range(t):
                rep.tick("d")
                y = cn(x[:i] + x[i + 1:])
                if y not in smaller:
                    rep.fail("d", f"{g} p={p}: {_fmt(x)} Empty but sub-tuple {_fmt(y)} is not")
    # certificate soundness on the Empty side
    for x in tabset:
        rep.tick("certificate")
        out = B.generation_certificate(cat, g, p, x)
        if out.verdict == B.FORCES_NONEMPTY:
            rep.fail("certificate", f"{g} p={p}: certificate claims {_fmt(x)} is NonEmpty")


def _audit_lie(cat, rep, g, p, classes):
    if p == 2:
        return
    tab = set(table_set(cat, g, p, 2))
    cn = Canon(cat, g, p)
    for pair in combinations_with_replacement(classes, 2):
        try:
            out = B.lie_algebra_test(cat, g, p, pair)
        except MissingData:
            continue
        rep.tick("lie")
        if out.verdict == B.FORCES_EMPTY and cn(pair) not in tab:
            rep.fail("lie", f"{g} p={p}: Lie criterion forces {_fmt(pair)} but tables disagree")


def _audit_tables(cat, rep, primes):
    # (f) canonical, disjoint, order-p tables
    seen = {}
    for r in cat.tables("A") + cat.tables("B") + cat.clos_rows:
        rep.tick("f")
        if list(r.labels) != L.sort_labels(r.labels):
            rep.fail("f", f"{r.id} is not sorted")
    for r in cat.tables("A") + cat.tables("B"):
        for p in primes:
            if not r.p_condition.admits(p, r.group):
                continue
            for x in r.labels:
                if not cat.is_order_p(r.group, x, p):
                    rep.fail("f", f"{r.id} admits p={p} but {x} is not of order p")
            key = (r.group, p, Canon(cat, r.group, p)(r.labels))
            if key in seen and seen[key] != r.id:
                rep.fail("f", f"{r.id} and {seen[key]} coincide at p={p}")
            seen[key] = r.id


def _audit_tau(cat, rep):
    # (e) decisions are tau-invariant wherever the graph automorphism acts
    for g, p in sorted(L.TAU_PAIRS):
        classes = cat.order_p_classes(g, p)
        for t in (2, 3, 4):
            if p == 2 and t == 2:
                continue
            for tup in combinations_with_replacement(classes, t):
                img = [L.tau_image(cat, g, p, x) for x in tup]
                a = decide_tables(cat, L.canonical_tuple(cat, g, p, tup)).verdict
                b = decide_tables(cat, L.canonical_tuple(cat, g, p, img)).verdict
                rep.tick("e")
                if a != b:
                    rep.fail("e", f"{g} p={p}: {_fmt(tup)} -> {a}, image -> {b}")


def _audit_fibre(cat, rep, primes):
    # (g) fibre identities, and coverage of Table B
    insts = list_fibre_instances(cat)
    for inst in insts:
        rep.tick("g")
        ok, res = check_fibre_instance(inst)
        if not ok:
            rep.fail("g", f"{inst.render()}: residual {res}")
        p = next(q for q in primes if inst.p_condition.admits(q, inst.group))
        labels = inst.X
        if all(cat.is_order_p(inst.group, x, p) for x in labels) and not (len(labels) == 2
                                                                          and p == 2):
            d = decide_tables(cat, L.canonical_tuple(cat, inst.group, p, labels))
            if d.verdict != EMPTY:
                rep.fail("g", f"{inst.render()} at p={p} is not Empty in the tables")
    for msg in fibre_dim_consistency(cat):
        rep.fail("g", msg)
    for r in cat.tables("B"):
        for p in primes:
            if not r.p_condition.admits(p, r.group):
                continue
            rep.tick("g")
            how = None
            for inst in insts:
                if inst.group != r.group or inst.t != len(r.labels):
                    continue
                try:
                    hit = C.product_dominated(cat, r.group, p, r.labels, inst.X)
                except DataGap:
                    continue
                if hit and inst.p_condition.admits(p, r.group):
                    how = "strict"
                    break
                if hit:
                    how = f"via {inst.render()} outside its range {inst.p_condition}"
            if how is None:
                rep.fail("g", f"{r.id} {r.render()} at p={p} has no fibre instance above it")
            elif how != "strict":
                rep.notes.append(f"{r.id} {r.render()} at p={p}: covered {how}")


def _audit_table5(cat, rep):
    # (h) fusion rows against fixed_point_dim and the tabulated alpha values
    best = {}
    for row in cat.fusion_rows:
        sub = cat.subgroup(row.group, row.subgroup)
        dg = cat.dim_class(row.group, row.g_class, row.p)
        rep.tick("h")
        try:
            d = B.fixed_point_dim(sub.dim_omega, dg, row.dim_h)
        except InvalidInput as exc:
            rep.fail("h", f"{row.h_class}: {exc}")
            continue
        key = (row.group, row.subgroup, row.g_class, row.p)
        best[key] = max(best.get(key, 0), d)
    for (g, h, x, p), d in best.items():
        dim_omega = cat.subgroup(g, h).dim_omega
        a = B.alpha_bound(cat, g, h, x, p).value
        rep.tick("h")
        if Fraction(d, dim_omega) != a:
            rep.fail("h", f"{g} {h} {x} p={p}: fusion gives {d}/{dim_omega}, table {a}")
    for fx in cat.character_fixtures:
        rep.tick("h")
        degs = [_degree(poly) for poly in fx.polynomials]
        if max(degs) != fx.dim_fixed:
            rep.fail("h", f"character fixture degree {max(degs)} != {fx.dim_fixed}")


def _degree(poly):
    deg = 0
    for term in poly.replace("-", "+").split("+"):
        term = term.strip()
        if "q" not in term:
            continue
        deg = max(deg, int(term.split("^")[1]) if "^" in term else 1)
    return deg


def _audit_alpha(cat, rep, primes):
    for r in cat.alpha_rows:
        for p in primes:
            rep.tick("alpha")
            v = r.value(p)
            if not 0 <= v <= 1:
                rep.fail("alpha", f"{r.group} {r.subgroup} {r.cls} p={p}: {v} outside [0,1]")
