"""Closure order on unipotent classes and componentwise domination of class tuples."""

from functools import lru_cache
from itertools import permutations

from . import labels as L
from .errors import MissingData, MissingPosetData, SizeMismatch


def _dim(cat, group, label, p):
    try:
        return cat.dim_class(group, label, p)
    except MissingData:
        return None


@lru_cache(maxsize=None)
def _poset(cat_id, group, p):
    cat = _REG[cat_id]
    below, complete = {}, set()
    for e in cat.closure_edges:
        if e.group != group or not e.p_condition.admits(p, group):
            continue
        if e.smaller == "*":
            complete.add(e.larger)
        else:
            below.setdefault(e.larger, set()).add(e.smaller)
    # transitive closure; the graph is small so a naive fixpoint is plenty
    down = {}

    def walk(b, stack=()):
        if b in down:
            return down[b]
        if b in stack:
            raise ValueError(f"closure cycle through {L.format_label(b)} in {group}")
        acc = set()
        for a in below.get(b, ()):
            acc.add(a)
            acc |= walk(a, stack + (b,))
        down[b] = frozenset(acc)
        return down[b]

    for b in list(below):
        walk(b)
    return down, frozenset(complete)


_REG = {}


def _register(cat):
    _REG[id(cat)] = cat
    return id(cat)


def down_set(cat, group, label, p):
    down, _ = _poset(_register(cat), group, p)
    return down.get(label, frozenset())


def leq3(cat, group, a, b, p):
    """True / False / None (unknown) for a <= b at characteristic p."""
    a = cat.require_class(group, a).label
    b = cat.require_class(group, b).label
    if a == b:
        return True
    down, complete = _poset(_register(cat), group, p)
    if a in down.get(b, ()):
        return True
    if b in complete or b in down.get(a, ()):
        return False  # b < a already known, so a <= b would force a == b
    m = _unique_minimal(cat, group, p)
    if a == m:
        return True  # the minimal class lies in the closure of every non-trivial class
    if b == m:
        return False
    da, db = _dim(cat, group, a, p), _dim(cat, group, b, p)
    if da is not None and db is not None and da >= db:
        return False  # strict order raises dimension
    return None


@lru_cache(maxsize=None)
def _unique_minimal_cached(cat_id, group, p):
    cat = _REG[cat_id]
    dims = sorted((d, x.key(), x) for x in cat.classes_at(group, p)
                  if (d := _dim(cat, group, x, p)) is not None)
    if len(dims) > 1 and dims[0][0] < dims[1][0]:
        return dims[0][2]
    return None


def _unique_minimal(cat, group, p):
    return _unique_minimal_cached(_register(cat), group, p)


def leq(cat, group, a, b, p):
    r = leq3(cat, group, a, b, p)
    if r is None:
        raise MissingPosetData(f"{group}: closure relation {a} <= {b} at p={p} not in dataset")
    return r


def find_domination(cat, group, p, X, Y):
    """A witness (X-variant, matched Y) with X_i <= Y_i, None if there is none.

    Raises MissingPosetData when no matching is proved but some comparison was unknown.
    """
    X = [cat.require_class(group, x).label for x in X]
    Y = [cat.require_class(group, y).label for y in Y]
    if len(X) != len(Y):
        raise SizeMismatch(f"tuples of sizes {len(X)} and {len(Y)}")
    unknown = False
    for variant in L.tuple_variants(cat, group, p, X):
        for perm in set(permutations(Y)):
            rs = [leq3(cat, group, x, y, p) for x, y in zip(variant, perm)]
            if all(r is True for r in rs):
                return variant, perm
            if False not in rs:
                unknown = True
    if unknown:
        raise MissingPosetData(f"{group}: domination of {_fmt(X)} by {_fmt(Y)} at p={p} "
                               "is undetermined")
    return None


def product_dominated(cat, group, p, X, Y):
    return find_domination(cat, group, p, X, Y) is not None


def _fmt(xs):
    return "(" + ",".join(L.format_label(x) for x in xs) + ")"


def poset_violations(cat, p):
    """Edges that fail to raise class dimension, or cycles, at p."""
    out = []
    for g in cat.groups:
        try:
            down, _ = _poset(_register(cat), g, p)
        except ValueError as exc:
            out.append(str(exc))
            continue
        for b, below in down.items():
            if not cat.has_class(g, b, p):
                continue
            db = _dim(cat, g, b, p)
            for a in below:
                if not cat.has_class(g, a, p):
                    out.append(f"{g} p={p}: edge {a} <= {b} names a class absent at p")
                    continue
                da = _dim(cat, g, a, p)
                if da is not None and db is not None and da >= db:
                    out.append(f"{g} p={p}: {a} <= {b} but dims {da} >= {db}")
    return out
