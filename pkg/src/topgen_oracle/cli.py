"""Command-line interface: ``topgen-oracle <command> ...``."""

import argparse
import json
import sys

from . import bounds as B
from . import closure as C
from . import engine as E
from . import labels as L
from .catalog import _split_top, load_catalog
from .errors import (DataGap, DatasetError, InvalidInput, RouteDisagreement, TopgenError)

SCHEMA_VERSION = 1
EXIT_OK, EXIT_INVALID, EXIT_GAP, EXIT_AUDIT, EXIT_DISAGREE = 0, 2, 3, 4, 5


def _common(defaults=True):
    # sub-command copies use SUPPRESS so they never overwrite options given before the command
    d = (lambda v: v) if defaults else (lambda v: argparse.SUPPRESS)
    pp = argparse.ArgumentParser(add_help=False)
    pp.add_argument("--data", metavar="DIR", default=d(None),
                    help="dataset directory (default: $TOPGEN_DATA or the bundled copy)")
    pp.add_argument("--format", choices=("text", "json"), default=d("text"))
    pp.add_argument("--extended", action="store_true", default=d(False),
                    help="also decide the listed order-4 and good-characteristic cases")
    return pp


def _query(pp):
    q = argparse.ArgumentParser(add_help=False, parents=[pp])
    q.add_argument("-g", "--group", required=True)
    q.add_argument("-p", "--prime", type=int, required=True)
    return q


def build_parser():
    pp = _common(defaults=False)
    q = _query(pp)
    ap = argparse.ArgumentParser(prog="topgen-oracle", parents=[_common()],
                                 description="Topological generation of exceptional groups by "
                                             "unipotent classes.")
    sub = ap.add_subparsers(dest="command", required=True)
    for name, text in (("decide", "decide whether Delta is empty"),
                       ("explain", "decide, with every criterion and Sigma ledger")):
        s = sub.add_parser(name, parents=[q], help=text)
        s.add_argument("-c", "--classes", required=True, help="comma-separated class labels")
        s.add_argument("--no-strict", action="store_true",
                       help="report route disagreement as a warning instead of failing")
    s = sub.add_parser("closure", parents=[q], help="closure-order query")
    s.add_argument("--leq", nargs=2, metavar=("A", "B"), required=True)
    s = sub.add_parser("alpha", parents=[q], help="tabulated alpha bound")
    s.add_argument("-H", "--subgroup", required=True)
    s.add_argument("-c", "--cls", required=True)
    s = sub.add_parser("tables", parents=[pp], help="dump the result tables")
    s.add_argument("--which", choices=("A", "B", "clos", "X"))
    s = sub.add_parser("audit", parents=[pp], help="run the dataset audit")
    s.add_argument("--fast", action="store_true", help=f"primes {E.FAST_PRIMES} only")
    return ap


def _emit(args, payload, text, out):
    if args.format == "json":
        out.write(json.dumps(payload, sort_keys=True, indent=1) + "\n")
    else:
        out.write(text + "\n")


def _decision_text(d):
    ev = d.evidence.get("tables", {})
    if "row" in ev:
        return f"{d.verdict.upper()} (Table {ev['table']} row {ev['row']} {ev['tuple']})"
    return f"{d.verdict.upper()} ({ev.get('reason', '')})"


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, L.ClassLabel):
        return L.format_label(x)
    return x


def _explain_text(d):
    lines = [_decision_text(d)]
    for route in ("inequality", "closure"):
        if route in d.evidence:
            lines.append(f"  {route}: {json.dumps(_jsonable(d.evidence[route]), sort_keys=True)}")
    crit = d.evidence.get("criteria", {})
    for name in ("weyl", "lie", "certificate"):
        if name in crit:
            c = {k: v for k, v in crit[name].items() if k != "ledgers"}
            lines.append(f"  {name}: {json.dumps(_jsonable(c), sort_keys=True)}")
    lines.append(f"  parabolic obstruction: {crit.get('parabolic_obstruction')}")
    for led in crit.get("sigma", []):
        terms = " + ".join(f"{t['alpha']}[{t['class']}]" for t in led["terms"])
        miss = f" missing {led['missing']}" if led["missing"] else ""
        mark = "<" if led["below_threshold"] else ">="
        lines.append(f"  Sigma({led['subgroup']}) = {terms} = {led['total']} {mark} "
                     f"{led['threshold']}{miss}")
    lines += [f"  warning: {w}" for w in d.warnings]
    return "\n".join(lines)


def _cmd_decide(args, cat, out):
    labels = _split_top(args.classes)
    tup = E.validate_input(cat, args.group, args.prime, labels, extended=args.extended)
    if args.command == "explain":
        d = E.explain(cat, tup, extended=args.extended)
        if d.warnings and not args.no_strict and any("disagree" in w for w in d.warnings):
            raise RouteDisagreement({"see": "; ".join(d.warnings)})
        text = _explain_text(d)
    else:
        d = E.decide(cat, tup, extended=args.extended, strict=not args.no_strict)
        text = _decision_text(d)
    payload = {"schema_version": SCHEMA_VERSION, "group": tup.group, "p": tup.p,
               "classes": [L.format_label(x) for x in tup.labels], "verdict": d.verdict,
               "route": d.route, "evidence": _jsonable(d.evidence), "warnings": d.warnings}
    _emit(args, payload, text, out)
    return EXIT_OK


def _cmd_closure(args, cat, out):
    a, b = args.leq
    r = C.leq(cat, args.group, a, b, args.prime)
    _emit(args, {"schema_version": SCHEMA_VERSION, "group": args.group, "p": args.prime,
                 "smaller": a, "larger": b, "leq": r}, "true" if r else "false", out)
    return EXIT_OK


def _cmd_alpha(args, cat, out):
    v = B.alpha_bound(cat, args.group, args.subgroup, args.cls, args.prime)
    _emit(args, {"schema_version": SCHEMA_VERSION, "group": args.group, "p": args.prime,
                 "subgroup": args.subgroup, "class": args.cls, "alpha": B._q(v.value),
                 "exact": v.exact, "kind": v.kind}, str(v), out)
    return EXIT_OK


def _cmd_tables(args, cat, out):
    groups = [args.which] if args.which else ["A", "B", "clos"]
    rows = []
    for w in groups:
        rows += cat.clos_rows if w == "clos" else cat.tables(w)
    payload = {"schema_version": SCHEMA_VERSION,
               "rows": [{"id": r.id, "table": r.table, "group": r.group,
                         "p_condition": str(r.p_condition), "tuple": r.render()} for r in rows]}
    text = "\n".join(f"{r.id}\t{r.group}\t{r.p_condition}\t{r.render()}" for r in rows)
    _emit(args, payload, text, out)
    return EXIT_OK


def _cmd_audit(args, cat, out):
    rep = E.audit(cat, primes=E.FAST_PRIMES if args.fast else E.REPRESENTATIVE_PRIMES)
    payload = {"schema_version": SCHEMA_VERSION, "ok": rep.ok, "checks": rep.checks,
               "failures": rep.failures, "gaps": rep.gaps, "notes": rep.notes,
               "domain_size": rep.domain_size}
    lines = [f"audit {'PASSED' if rep.ok else 'FAILED'}: {sum(rep.checks.values())} assertions "
             f"over {len(rep.checks)} checks, enumeration domain {rep.domain_size} tuples, "
             f"{rep.elapsed:.1f}s"]
    lines += [f"  check {k}: {v}" for k, v in sorted(rep.checks.items())]
    lines += [f"FAIL {f}" for f in rep.failures]
    lines += [f"gap  {g}" for g in rep.gaps]
    lines += [f"note {n}" for n in rep.notes]
    _emit(args, payload, "\n".join(lines), out)
    return EXIT_OK if rep.ok else EXIT_AUDIT


COMMANDS = {"decide": _cmd_decide, "explain": _cmd_decide, "closure": _cmd_closure,
            "alpha": _cmd_alpha, "tables": _cmd_tables, "audit": _cmd_audit}


def run(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        cat = load_catalog(args.data)
        return COMMANDS[args.command](args, cat, out)
    except RouteDisagreement as exc:
        err.write(f"error: {exc}\n")
        return EXIT_DISAGREE
    except InvalidInput as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INVALID
    except (DataGap, DatasetError) as exc:
        err.write(f"data gap: {exc}\n")
        return EXIT_GAP
    except TopgenError as exc:  # pragma: no cover - every subclass is mapped above
        err.write(f"error: {exc}\n")
        return EXIT_INVALID


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
