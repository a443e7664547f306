"""Command line front end.

    python -m orderpoly.cli enum --n 3 --class swo --count-only
    python -m orderpoly.cli check --n 3 --class so --ineq "x(1,2)+x(2,3)-x(1,3)<=1"
    python -m orderpoly.cli facets --n 4 --class po

Exit codes: 0 success, 1 usage error, 2 size guard, 3 cross-check disagreement.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from . import crosscheck as xc
from . import median as med
from . import polytope as pt
from . import primaryineq as pi
from .relations import OrderClass, arcs, enumerate_relations, format_relation, relation_to_json

EXIT_OK, EXIT_USAGE, EXIT_GUARD, EXIT_DISAGREE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _read_ineq(args, n=None) -> pt.GeneralInequality:
    if args.ineq and args.file:
        raise UsageError("give either --ineq or --file, not both")
    if args.ineq:
        text = args.ineq
    elif args.file:
        text = Path(args.file).read_text()
    else:
        raise UsageError("an inequality is required (--ineq or --file)")
    try:
        return pi.load_inequality(text, n)
    except (ValueError, KeyError) as e:
        raise UsageError(str(e)) from None


def _need_n(args) -> int:
    if args.n is None:
        raise UsageError("--n is required")
    if args.n < 2:
        raise UsageError("--n must be at least 2")
    return args.n


def _need_class(args) -> OrderClass:
    if args.cls is None:
        raise UsageError("--class is required")
    return OrderClass.parse(args.cls)


def cmd_enum(args) -> tuple[int, str]:
    n, cls = _need_n(args), _need_class(args)
    try:
        rels = enumerate_relations(n, cls)
    except ValueError as e:
        return EXIT_GUARD, str(e)
    if args.count_only:
        return EXIT_OK, str(len(rels)) if args.format == "text" else _dump({"class": cls.value, "count": len(rels), "n": n})
    if args.format == "text":
        return EXIT_OK, "\n".join(format_relation(r) for r in rels)
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([f"{i},{j}" for i, j in arcs(n)])
        for r in rels:
            w.writerow([r.bits >> k & 1 for k in range(len(arcs(n)))])
        return EXIT_OK, buf.getvalue().rstrip("\n")
    return EXIT_OK, _dump({"class": cls.value, "count": len(rels), "n": n,
                           "relations": [relation_to_json(r)["pairs"] for r in rels]})


def cmd_check(args) -> tuple[int, str]:
    n, cls = _need_n(args), _need_class(args)
    q = _read_ineq(args, n)
    try:
        vs = pt.build(n, cls)
    except ValueError as e:
        return EXIT_GUARD, str(e)
    rep = pt.check_face(vs, q)
    out = rep.to_json()
    out.update({"n": n, "class": cls.value, "inequality": str(q), "dim": vs.dim})
    return EXIT_OK, _dump(out)


def cmd_classify(args) -> tuple[int, str]:
    n, cls = _need_n(args), _need_class(args)
    if cls.value not in pi.CLASSIFIERS:
        raise UsageError("classify supports --class po, io or so")
    q = _read_ineq(args, n)
    try:
        p = pi.PrimaryInequality.from_general(q)
    except ValueError:
        raise UsageError("classify needs a primary inequality (coefficients and rhs in {-1,0,1})") from None
    v = pi.CLASSIFIERS[cls.value](p)
    out = v.to_json()
    out.update({"n": n, "class": cls.value, "inequality": str(p)})
    return EXIT_OK, _dump(out)


def cmd_crosscheck(args) -> tuple[int, str]:
    n, cls = _need_n(args), _need_class(args)
    if cls.value not in pi.CLASSIFIERS:
        raise UsageError("crosscheck supports --class po, io or so")
    if n > 4 and not args.override_guard:
        return EXIT_GUARD, f"crosscheck is limited to n <= 4 (3^{n * (n - 1)} sign vectors); use --override-guard"
    rep = xc.crosscheck(n, cls, workers=max(1, args.threads))
    return (EXIT_OK if rep.ok else EXIT_DISAGREE), _dump(rep.to_json())


def cmd_facets(args) -> tuple[int, str]:
    n, cls = _need_n(args), _need_class(args)
    try:
        vs = pt.build(n, cls)
        if args.override_guard:
            fs = pt.enumerate_facets(vs, max_dim=10**9, max_vertices=10**9)
        else:
            fs = pt.enumerate_facets(vs)
    except (pt.SizeGuardError, ValueError) as e:
        return EXIT_GUARD, str(e)
    classes = pt.orbit_count(fs.facets, n, fs.equalities)
    if args.count_only:
        return EXIT_OK, _dump({"class": cls.value, "n": n, "facets": len(fs.facets), "orbits": classes})
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([f"{i},{j}" for i, j in arcs(n)] + ["rhs"])
        for q in fs.facets:
            a, b = q.integer_form()
            w.writerow(a + [b])
        return EXIT_OK, buf.getvalue().rstrip("\n")
    if args.format == "text":
        lines = [f"P_{cls.value}^{n}: {len(fs.facets)} facets, {classes} classes up to relabelling"]
        lines += [str(q) for q in fs.facets]
        return EXIT_OK, "\n".join(lines)
    out = fs.to_json()
    out["orbits"] = classes
    out["count"] = len(fs.facets)
    return EXIT_OK, _dump(out)


def cmd_median(args) -> tuple[int, str]:
    cls = _need_class(args)
    if not args.file:
        raise UsageError("median needs --file with a JSON profile")
    try:
        prof = med.Profile.from_json(Path(args.file).read_text())
    except (ValueError, KeyError) as e:
        raise UsageError(f"bad profile: {e}") from None
    try:
        res = med.median_order(prof, cls)
    except ValueError as e:
        return EXIT_GUARD, str(e)
    out = res.to_json()
    out.update({"class": cls.value, "n": prof.n})
    return EXIT_OK, _dump(out)


def cmd_lift(args) -> tuple[int, str]:
    n = _need_n(args)
    q = _read_ineq(args, n)
    to = args.to if args.to is not None else n + 1
    if to < n:
        raise UsageError("--to must be at least --n")
    lifted = pt.lift_inequality(q, to)
    out = {"n": n, "to": to, "inequality": str(q), "lifted": str(lifted)}
    if args.cls:
        cls = OrderClass.parse(args.cls)
        try:
            before = pt.check_face(pt.build(n, cls), q)
            after = pt.check_face(pt.build(to, cls), lifted)
        except ValueError as e:
            return EXIT_GUARD, str(e)
        out.update({"class": cls.value, "before": before.to_json(), "after": after.to_json()})
    return EXIT_OK, _dump(out)


COMMANDS = {
    "enum": cmd_enum,
    "check": cmd_check,
    "classify": cmd_classify,
    "crosscheck": cmd_crosscheck,
    "facets": cmd_facets,
    "median": cmd_median,
    "lift": cmd_lift,
}


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="orderpoly", description="Order polytopes and their primary inequalities.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    for name in COMMANDS:
        s = sub.add_parser(name)
        s.add_argument("--n", type=int)
        s.add_argument("--class", dest="cls", choices=[c.value for c in OrderClass])
        s.add_argument("--format", choices=["json", "csv", "text"], default="json")
        s.add_argument("--threads", type=int, default=1)
        s.add_argument("--count-only", action="store_true")
        s.add_argument("--override-guard", action="store_true")
        s.add_argument("--ineq")
        s.add_argument("--file")
        if name == "lift":
            s.add_argument("--to", type=int)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not args.command:
            raise UsageError("a subcommand is required")
        code, text = COMMANDS[args.command](args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    stream = sys.stdout if code in (EXIT_OK, EXIT_DISAGREE) else sys.stderr
    print(text, file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
