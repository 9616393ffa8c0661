"""Static data: groups, unipotent classes, maximal subgroups, result tables.

All files are tab-separated with '#' comments and a header line; the loader rejects unknown
or missing columns, duplicate keys and labels that do not resolve to a class record.
"""

import ast
import operator
import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from pathlib import Path

from . import labels as L
from .errors import (DanglingReference, DuplicateRow, InvalidInput, LabelSyntaxError, MissingData,
                     NoGraphAutomorphism, ParseError, UnknownClass, UnknownFamily, UnknownGroup)
from .pcond import PCondition, Regime, parse_pcondition, parse_regime

GROUP_NAMES = ("G2", "F4", "E6", "E7", "E8")
DEFAULT_DATA = Path(__file__).resolve().parent / "data"

SCHEMAS = {
    "groups.tsv": ["group", "dim_G", "rank", "coxeter", "ref_module_dim", "adjoint_dim",
                   "dim_center", "provenance"],
    "classes.tsv": ["group", "label", "dim_class", "order_p", "exists", "fixed_ref", "fixed_adj",
                    "provenance"],
    "tau.tsv": ["group", "p", "label", "image", "provenance"],
    "closure.tsv": ["group", "smaller", "larger", "p_condition", "provenance"],
    "subgroups.tsv": ["group", "label", "kind", "p_condition", "dim_omega", "in_long",
                      "provenance"],
    "alpha_bounds.tsv": ["group", "subgroup", "class", "base", "delta_prime", "delta_coeff",
                         "exact", "provenance"],
    "tables_ab.tsv": ["id", "table", "group", "p_condition", "tuple", "provenance"],
    "table_clos.tsv": ["id", "group", "p_condition", "tuple", "provenance"],
    "fibre_instances.tsv": ["group", "p_condition", "L", "M", "dim_M", "X", "D", "flags",
                            "provenance"],
    "graph_coset.tsv": ["family", "p", "n", "dims", "centralizers", "provenance"],
    "parabolic_obstructions.tsv": ["group", "p_condition", "tuple", "case", "provenance"],
    "character_fixtures.tsv": ["group", "subgroup", "class", "p_condition", "dim_omega",
                               "polynomials", "dim_fixed", "provenance"],
    "fusion.tsv": ["group", "subgroup", "p", "h_class", "h_alt", "dim_h", "g_class",
                   "provenance"],
}
EXACT_FLAGS = ("exact", "upper", "strict", "strict-unless-delta")


@dataclass(frozen=True)
class GroupDescriptor:
    type_tag: str
    dim_G: int
    rank: int
    coxeter_number: int
    ref_module_dim: int
    adjoint_dim: int
    dim_center: Regime


@dataclass(frozen=True)
class ClassRecord:
    group: str
    label: L.ClassLabel
    dim_class: Regime
    order_p: PCondition
    exists: PCondition
    fixed_dim_ref: Regime
    fixed_dim_adjoint: Regime
    provenance: str

    def dim_at(self, p):
        v = self.dim_class.at(p, self.group)
        if v is None:
            raise MissingData("dim_class", f"{self.group} {self.label} at p={p}")
        return v


@dataclass(frozen=True)
class MaxSubgroupRecord:
    group: str
    label: str
    kind: str  # 'parabolic' or 'reductive'
    index: int  # parabolic node, 0 for reductive
    p_condition: PCondition
    dim_omega: int
    in_long_collection: bool
    provenance: str


@dataclass(frozen=True)
class AlphaRow:
    group: str
    subgroup: str
    cls: object  # ClassLabel or '*'
    base: Fraction
    delta_prime: int
    delta_coeff: Fraction
    exact: str
    provenance: str

    def value(self, p):
        v = self.base
        if self.delta_prime and p == self.delta_prime:
            v += self.delta_coeff
        return v


@dataclass(frozen=True)
class TableRow:
    id: str
    table: str  # 'A', 'B', 'X' (extended) or 'clos'
    group: str
    p_condition: PCondition
    labels: tuple
    provenance: str

    def render(self):
        return "(" + ",".join(L.format_label(x) for x in self.labels) + ")"


@dataclass(frozen=True)
class ClosureEdge:
    group: str
    smaller: object  # ClassLabel or '*'
    larger: L.ClassLabel
    p_condition: PCondition
    provenance: str


@dataclass(frozen=True)
class GraphCosetRecord:
    ambient: str
    p: int
    class_dims: tuple
    centralizer_labels: tuple


@dataclass(frozen=True)
class FibreRow:
    group: str
    p_condition: PCondition
    L: str
    M: str
    dim_M: int
    X: tuple
    D: tuple
    flags: tuple
    provenance: str


@dataclass(frozen=True)
class FusionRow:
    group: str
    subgroup: str
    p: int
    h_class: str
    dim_h: int
    g_class: L.ClassLabel
    provenance: str


@dataclass(frozen=True)
class CharacterFixture:
    group: str
    subgroup: str
    cls: L.ClassLabel
    p_condition: PCondition
    dim_omega: int
    polynomials: tuple
    dim_fixed: int
    provenance: str


def _read(root, name):
    path = Path(root) / name
    if not path.exists():
        raise ParseError(name, 0, "file missing")
    rows, header = [], None
    with open(path, encoding="utf-8") as fh:
        for n, raw in enumerate(fh, start=1):
            line = raw.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            cells = line.split("\t")
            if header is None:
                if cells != SCHEMAS[name]:
                    extra = set(cells) - set(SCHEMAS[name])
                    what = f"unknown columns {sorted(extra)}" if extra else "column mismatch"
                    raise ParseError(name, n, f"{what}; expected {SCHEMAS[name]}")
                header = cells
                continue
            if len(cells) != len(header):
                raise ParseError(name, n, f"expected {len(header)} cells, got {len(cells)}")
            rows.append((n, dict(zip(header, cells))))
    if header is None:
        raise ParseError(name, 0, "no header line")
    return rows


def _frac(text):
    return Fraction(text)


def _conv(name, n, fn, text):
    try:
        return fn(text)
    except (ValueError, ZeroDivisionError, UnknownFamily, LabelSyntaxError) as exc:
        raise ParseError(name, n, f"{text!r}: {exc}") from None


def _group(name, n, text):
    if text not in GROUP_NAMES:
        raise ParseError(name, n, f"unknown group {text!r}")
    return text


def _tuple(text):
    return tuple(L.parse_label(x) for x in _split_top(text))


def _split_top(text):
    parts, depth, cur = [], 0, ""
    for ch in text:
        if ch == "," and depth == 0:
            parts.append(cur)
            cur = ""
            continue
        depth += ch == "("
        depth -= ch == ")"
        cur += ch
    parts.append(cur)
    return [p.strip() for p in parts]


_OPS = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul,
        ast.Pow: operator.pow}


def eval_dim_expr(text, m):
    """Integer arithmetic in the single variable m ('^' is exponentiation)."""
    def walk(node):
        if isinstance(node, ast.Expression):
            return walk(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return node.value
        if isinstance(node, ast.Name) and node.id == "m":
            return m
        if isinstance(node, ast.BinOp) and type(node.op) in _OPS:
            return _OPS[type(node.op)](walk(node.left), walk(node.right))
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
            return -walk(node.operand)
        raise ValueError(f"unsupported expression {text!r}")
    return walk(ast.parse(text.replace("^", "**"), mode="eval"))


@dataclass
class Catalog:
    root: Path
    groups: dict = field(default_factory=dict)
    classes: dict = field(default_factory=dict)  # group -> {ClassLabel: ClassRecord}
    tau: dict = field(default_factory=dict)  # (group, p) -> {ClassLabel: ClassLabel}
    closure_edges: list = field(default_factory=list)
    subgroup_records: dict = field(default_factory=dict)  # group -> [MaxSubgroupRecord]
    alpha_rows: list = field(default_factory=list)
    table_rows: list = field(default_factory=list)
    clos_rows: list = field(default_factory=list)
    fibre_rows: list = field(default_factory=list)
    graph_rows: dict = field(default_factory=dict)
    parabolic_rows: list = field(default_factory=list)
    character_fixtures: list = field(default_factory=list)
    fusion_rows: list = field(default_factory=list)

    # -- lookups ---------------------------------------------------------------------------
    def group(self, name):
        try:
            return self.groups[name]
        except KeyError:
            raise UnknownGroup(f"unknown group {name!r}") from None

    def require_class(self, group, label):
        label = label if isinstance(label, L.ClassLabel) else L.parse_label(label)
        rec = self.classes.get(self.group(group).type_tag, {}).get(label)
        if rec is None:
            raise UnknownClass(group, L.format_label(label))
        return rec

    def class_info(self, group, label):
        return self.require_class(group, label)

    def has_class(self, group, label, p=None):
        rec = self.classes.get(group, {}).get(label)
        return rec is not None and (p is None or rec.exists.admits(p, group))

    def fixed_space_dim(self, group, label, p):
        rec = self.require_class(group, label)
        v = rec.fixed_dim_ref.at(p, group)
        if v is None or not rec.exists.admits(p, group):
            raise MissingData("fixed_dim_ref", f"{group} {rec.label} at p={p}")
        return v

    def fixed_space_dim_adjoint(self, group, label, p):
        rec = self.require_class(group, label)
        v = rec.fixed_dim_adjoint.at(p, group)
        if v is None or not rec.exists.admits(p, group):
            raise MissingData("fixed_dim_adjoint", f"{group} {rec.label} at p={p}")
        return v

    def dim_class(self, group, label, p):
        return self.require_class(group, label).dim_at(p)

    def is_order_p(self, group, label, p):
        rec = self.require_class(group, label)
        return rec.exists.admits(p, group) and rec.order_p.admits(p, group)

    def order_p_classes(self, group, p):
        self.group(group)
        return L.sort_labels(x for x, rec in self.classes[group].items()
                             if rec.exists.admits(p, group) and rec.order_p.admits(p, group))

    def classes_at(self, group, p):
        return L.sort_labels(x for x, rec in self.classes[group].items()
                             if rec.exists.admits(p, group))

    def subgroups(self, group, p):
        self.group(group)
        return [s for s in self.subgroup_records[group] if s.p_condition.admits(p, group)]

    def subgroup(self, group, label):
        for s in self.subgroup_records.get(group, []):
            if s.label == label:
                return s
        from .errors import UnknownSubgroup
        raise UnknownSubgroup(f"{group} has no maximal subgroup {label!r}")

    def graph_coset_classes(self, family, p):
        fam = family.strip()
        key, m = fam, None
        if fam.startswith("A") and fam[1:].isdigit():
            n = int(fam[1:])
            if n < 2:
                raise NoGraphAutomorphism(f"{fam} has no graph automorphism")
            key, m = ("A2m", n // 2) if n % 2 == 0 else ("A2m-1", (n + 1) // 2)
        row = self.graph_rows.get((key, p))
        if row is None:
            raise NoGraphAutomorphism(f"no graph automorphism of order {p} for {fam}")
        dims = tuple(eval_dim_expr(d, m) if m is not None else int(d) for d in row["dims"])
        cents = tuple(c.replace("m", str(m)) if m is not None else c for c in row["cents"])
        return GraphCosetRecord(fam, p, dims, cents)

    def tables(self, which):
        return [r for r in self.table_rows if r.table == which]

    def all_labels(self):
        for g, recs in self.classes.items():
            for x in recs:
                yield g, x


def _load(root):
    root = Path(root)
    cat = Catalog(root)

    for n, r in _read(root, "groups.tsv"):
        g = _group("groups.tsv", n, r["group"])
        if g in cat.groups:
            raise DuplicateRow(f"groups.tsv:{n}: {g}")
        ints = [_conv("groups.tsv", n, int, r[k]) for k in
                ("dim_G", "rank", "coxeter", "ref_module_dim", "adjoint_dim")]
        cat.groups[g] = GroupDescriptor(g, *ints, _conv("groups.tsv", n, parse_regime,
                                                         r["dim_center"]))
        cat.classes[g] = {}
        cat.subgroup_records[g] = []
    for g in GROUP_NAMES:
        if g not in cat.groups:
            raise ParseError("groups.tsv", 0, f"group {g} missing")

    def group_of(name, n, text):
        g = _group(name, n, text)
        if g not in cat.groups:
            raise DanglingReference(f"{name}:{n}: group {g}")
        return g

    def resolve(name, n, g, label):
        if label not in cat.classes[g]:
            raise DanglingReference(f"{name}:{n}: {g} class {L.format_label(label)}")
        return label

    name = "classes.tsv"
    for n, r in _read(root, name):
        g = group_of(name, n, r["group"])
        lab = _conv(name, n, L.parse_label, r["label"])
        if lab in cat.classes[g]:
            raise DuplicateRow(f"{name}:{n}: {g} {r['label']}")
        if L.format_label(lab) != r["label"]:
            raise ParseError(name, n, f"label {r['label']!r} is not in canonical form")
        rec = ClassRecord(
            g, lab, _conv(name, n, parse_regime, r["dim_class"]),
            _conv(name, n, parse_pcondition, r["order_p"]),
            _conv(name, n, parse_pcondition, r["exists"]),
            _conv(name, n, parse_regime, r["fixed_ref"]),
            _conv(name, n, parse_regime, r["fixed_adj"]), r["provenance"])
        dimg, dimv = cat.groups[g].dim_G, cat.groups[g].ref_module_dim
        for v in rec.dim_class.values():
            if v is not None and not 0 < v < dimg:
                raise ParseError(name, n, f"class dimension {v} out of range")
        for v in rec.fixed_dim_ref.values():
            if v is not None and not 1 <= v <= dimv:
                raise ParseError(name, n, f"fixed-space dimension {v} out of range")
        cat.classes[g][lab] = rec

    name = "tau.tsv"
    for n, r in _read(root, name):
        g = group_of(name, n, r["group"])
        p = _conv(name, n, int, r["p"])
        a = resolve(name, n, g, _conv(name, n, L.parse_label, r["label"]))
        b = resolve(name, n, g, _conv(name, n, L.parse_label, r["image"]))
        m = cat.tau.setdefault((g, p), {})
        if a in m:
            raise DuplicateRow(f"{name}:{n}")
        m[a] = b

    name = "closure.tsv"
    seen = set()
    for n, r in _read(root, name):
        g = group_of(name, n, r["group"])
        small = "*" if r["smaller"] == "*" else resolve(
            name, n, g, _conv(name, n, L.parse_label, r["smaller"]))
        large = resolve(name, n, g, _conv(name, n, L.parse_label, r["larger"]))
        pc = _conv(name, n, parse_pcondition, r["p_condition"])
        key = (g, small, large, pc)
        if key in seen:
            raise DuplicateRow(f"{name}:{n}")
        seen.add(key)
        cat.closure_edges.append(ClosureEdge(g, small, large, pc, r["provenance"]))

    name = "subgroups.tsv"
    for n, r in _read(root, name):
        g = group_of(name, n, r["group"])
        kind = r["kind"]
        if kind.startswith("parabolic:"):
            idx = _conv(name, n, int, kind.split(":")[1])
            if not 1 <= idx <= cat.groups[g].rank:
                raise ParseError(name, n, f"parabolic index {idx} out of range")
            kind = "parabolic"
        elif kind == "reductive":
            idx = 0
        else:
            raise ParseError(name, n, f"bad kind {kind!r}")
        if any(s.label == r["label"] for s in cat.subgroup_records[g]):
            raise DuplicateRow(f"{name}:{n}: {g} {r['label']}")
        if r["in_long"] not in ("yes", "no", "-"):
            raise ParseError(name, n, "in_long must be yes, no or -")
        cat.subgroup_records[g].append(MaxSubgroupRecord(
            g, r["label"], kind, idx, _conv(name, n, parse_pcondition, r["p_condition"]),
            _conv(name, n, int, r["dim_omega"]), r["in_long"] == "yes", r["provenance"]))

    name = "alpha_bounds.tsv"
    seen = set()
    for n, r in _read(root, name):
        g = group_of(name, n, r["group"])
        sub = r["subgroup"]
        if sub != "*" and not any(s.label == sub for s in cat.subgroup_records[g]):
            raise DanglingReference(f"{name}:{n}: {g} subgroup {sub}")
        cls = "*" if r["class"] == "*" else resolve(name, n, g,
                                                    _conv(name, n, L.parse_label, r["class"]))
        if r["exact"] not in EXACT_FLAGS:
            raise ParseError(name, n, f"exact flag must be one of {EXACT_FLAGS}")
        dp = 0 if r["delta_prime"] == "-" else _conv(name, n, int, r["delta_prime"])
        dc = Fraction(0) if r["delta_coeff"] == "-" else _conv(name, n, _frac, r["delta_coeff"])
        row = AlphaRow(g, sub, cls, _conv(name, n, _frac, r["base"]), dp, dc, r["exact"],
                       r["provenance"])
        for v in (row.base, row.base + row.delta_coeff):
            if not 0 <= v <= 1:
                raise ParseError(name, n, f"alpha value {v} outside [0,1]")
        if (g, sub, cls) in seen:
            raise DuplicateRow(f"{name}:{n}")
        seen.add((g, sub, cls))
        cat.alpha_rows.append(row)

    name = "tables_ab.tsv"
    ids = set()
    for n, r in _read(root, name):
        g = group_of(name, n, r["group"])
        if r["table"] not in ("A", "B", "X"):
            raise ParseError(name, n, "table must be A, B or X")
        if r["id"] in ids:
            raise DuplicateRow(f"{name}:{n}: {r['id']}")
        ids.add(r["id"])
        tup = tuple(resolve(name, n, g, x) for x in _conv(name, n, _tuple, r["tuple"]))
        cat.table_rows.append(TableRow(r["id"], r["table"], g,
                                       _conv(name, n, parse_pcondition, r["p_condition"]),
                                       tup, r["provenance"]))

    name = "table_clos.tsv"
    for n, r in _read(root, name):
        g = group_of(name, n, r["group"])
        if r["id"] in ids:
            raise DuplicateRow(f"{name}:{n}: {r['id']}")
        ids.add(r["id"])
        tup = tuple(resolve(name, n, g, x) for x in _conv(name, n, _tuple, r["tuple"]))
        cat.clos_rows.append(TableRow(r["id"], "clos", g,
                                      _conv(name, n, parse_pcondition, r["p_condition"]),
                                      tup, r["provenance"]))

    name = "fibre_instances.tsv"
    for n, r in _read(root, name):
        g = group_of(name, n, r["group"])
        X = tuple(resolve(name, n, g, x) for x in _conv(name, n, _tuple, r["X"]))
        D = tuple(_conv(name, n, int, x) for x in r["D"].split(","))
        if len(X) != len(D):
            raise ParseError(name, n, "X and D have different lengths")
        flags = () if r["flags"] == "-" else tuple(r["flags"].split(","))
        cat.fibre_rows.append(FibreRow(g, _conv(name, n, parse_pcondition, r["p_condition"]),
                                       r["L"], r["M"], _conv(name, n, int, r["dim_M"]), X, D,
                                       flags, r["provenance"]))

    name = "graph_coset.tsv"
    for n, r in _read(root, name):
        p = _conv(name, n, int, r["p"])
        key = (r["family"], p)
        if key in cat.graph_rows:
            raise DuplicateRow(f"{name}:{n}")
        dims = r["dims"].split(",")
        cents = r["centralizers"].split(",")
        count = _conv(name, n, int, r["n"])
        if not len(dims) == len(cents) == count:
            raise ParseError(name, n, "dims and centralizers must both have n entries")
        for d in dims:
            _conv(name, n, lambda s: eval_dim_expr(s, 1), d)
        cat.graph_rows[key] = {"dims": dims, "cents": cents, "n": count}

    name = "parabolic_obstructions.tsv"
    for n, r in _read(root, name):
        g = group_of(name, n, r["group"])
        tup = tuple(resolve(name, n, g, x) for x in _conv(name, n, _tuple, r["tuple"]))
        if r["case"] not in ("iii", "iv"):
            raise ParseError(name, n, "case must be iii or iv")
        cat.parabolic_rows.append(TableRow(f"par.{n}", r["case"], g,
                                           _conv(name, n, parse_pcondition, r["p_condition"]),
                                           tup, r["provenance"]))

    name = "character_fixtures.tsv"
    for n, r in _read(root, name):
        g = group_of(name, n, r["group"])
        cat.subgroup(g, r["subgroup"])
        cat.character_fixtures.append(CharacterFixture(
            g, r["subgroup"], resolve(name, n, g, _conv(name, n, L.parse_label, r["class"])),
            _conv(name, n, parse_pcondition, r["p_condition"]),
            _conv(name, n, int, r["dim_omega"]), tuple(r["polynomials"].split(";")),
            _conv(name, n, int, r["dim_fixed"]), r["provenance"]))

    name = "fusion.tsv"
    for n, r in _read(root, name):
        g = group_of(name, n, r["group"])
        cat.subgroup(g, r["subgroup"])
        cat.fusion_rows.append(FusionRow(
            g, r["subgroup"], _conv(name, n, int, r["p"]), r["h_class"],
            _conv(name, n, int, r["dim_h"]),
            resolve(name, n, g, _conv(name, n, L.parse_label, r["g_class"])), r["provenance"]))
    return cat


def data_dir(path=None):
    if path:
        return Path(path)
    env = os.environ.get("TOPGEN_DATA")
    return Path(env) if env else DEFAULT_DATA


@lru_cache(maxsize=8)
def _cached(root):
    return _load(root)


def load_catalog(root=None):
    """Load (and memoise) the dataset directory; defaults to TOPGEN_DATA or the bundled copy."""
    try:
        return _cached(str(Path(data_dir(root)).resolve()))
    except InvalidInput as exc:  # label errors inside data files surface as parse errors
        raise ParseError("dataset", 0, str(exc)) from exc
