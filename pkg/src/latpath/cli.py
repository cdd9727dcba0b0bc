"""Command-line front end: ``latpath <command> [options]``.

Step sets come from ``--family`` with ``--N``/``--K``, or from ``--steps``
such as ``"V,U1,U0,D1,D2"`` (``D*`` for every down step).  Ranges are
written ``a..b`` and are inclusive.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Dict, List, Optional, Sequence

from . import bijection, brute, count, riordan, series, stats
from .checks import REGISTRY, run_checks
from .paths import PathError, format_path, parse_path
from .steps import FAMILIES, StepSet, StepSetError, make_family


class UsageError(Exception):
    pass


def parse_range(text: str) -> List[int]:
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            lo, hi = int(a), int(b)
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"bad range {text!r}, expected a..b") from None
    if hi < lo:
        raise UsageError(f"empty range {text!r}")
    return list(range(lo, hi + 1))


def resolve_steps(args: argparse.Namespace) -> StepSet:
    family = args.family
    if args.steps:
        if family not in (None, "custom"):
            raise UsageError("--steps only goes with --family custom")
        return StepSet.parse(args.steps)
    if family in (None, "custom"):
        raise UsageError("give --family A..E or --steps")
    return make_family(family, args.N, args.K)


def _params(args: argparse.Namespace, S: StepSet, **extra: Any) -> Dict[str, Any]:
    out: Dict[str, Any] = {"steps": str(S)}
    if args.N is not None:
        out["N"] = args.N
    if args.K is not None:
        out["K"] = args.K
    out.update({k: v for k, v in extra.items() if v is not None})
    return out


def emit(args: argparse.Namespace, S: StepSet, values: Sequence[Any], default: str = "csv", **extra: Any) -> None:
    fmt = args.format or default
    if fmt == "json":
        doc = {"family": args.family or "custom", "params": _params(args, S, **extra), "values": list(values)}
        print(json.dumps(doc))
    elif fmt == "csv":
        print(",".join(str(v) for v in values))
    else:
        for v in values:
            print(v)


# ----------------------------------------------------------------- commands


def cmd_count(args: argparse.Namespace) -> int:
    S = resolve_steps(args)
    ns = parse_range(args.n)
    if args.kind == "closed":
        if not args.form:
            raise UsageError("--kind closed needs --form")
        vals = [count.family_closed_form(args.form, args.N or 0, args.K or 1, args.m, n) for n in ns]
    else:
        vals = [count.count(S, args.kind, args.m, n) for n in ns]
    m = 1 if args.kind == "primary1" else args.m
    emit(args, S, vals, kind=args.kind, m=m, n=args.n)
    return 0


def cmd_enumerate(args: argparse.Namespace) -> int:
    S = resolve_steps(args)
    budget = brute.EnumerationBudget.from_env()
    n = int(args.n)
    if args.kind == "free":
        paths = brute.enumerate_free(S, args.m, n, budget)
    else:
        paths = brute.enumerate_primary(S, args.m, n, budget)
    emit(args, S, [format_path(p) for p in paths], default="text", kind=args.kind, m=args.m, n=n)
    return 0


def cmd_bijection(args: argparse.Namespace) -> int:
    S = resolve_steps(args)
    p = parse_path(args.path)
    if args.weights:
        weights = tuple(int(w) for w in args.weights.split(","))
        image = bijection.map_f(bijection.WeightedPath(p, weights), S)
        doc = {"path": format_path(image)}
    else:
        wp = bijection.map_g(p, S)
        doc = {
            "path": format_path(wp.path),
            "weights": list(wp.weights),
            "bounds": list(bijection.path_weight_bounds(wp.path, S)),
        }
    if (args.format or "json") == "json":
        print(json.dumps(doc))
    else:
        print(" ".join(f"{k}={v}" for k, v in doc.items()))
    return 0


def cmd_stats(args: argparse.Namespace) -> int:
    S = resolve_steps(args)
    budget = brute.EnumerationBudget.from_env()
    rows = []
    for n in parse_range(args.n):
        row: Dict[str, Any] = {"n": n}
        if args.census:
            c = stats.census(S, n, budget)
            row["census"] = {str(s): v for s, v in sorted(c.per_step.items())}
            row["total"] = c.total
        if S.has_vertical:
            row["expected_vertical"] = str(stats.expected_vertical(S, n))
            row["expected_steps"] = str(stats.expected_steps(S, n))
        rows.append(row)
    emit(args, S, rows, default="json", n=args.n)
    return 0


def cmd_riordan(args: argparse.Namespace) -> int:
    S = resolve_steps(args)
    arr = riordan.riordan_for(S, args.rows)
    if (args.format or "text") == "json":
        emit(args, S, [list(r) for r in arr.matrix], rows=args.rows)
    elif args.format == "csv":
        for r in arr.matrix:
            print(",".join(str(v) for v in r))
    else:
        width = max(len(str(v)) for r in arr.matrix for v in r)
        for r in arr.matrix:
            print(" ".join(str(v).rjust(width) for v in r))
    return 0


def cmd_series(args: argparse.Namespace) -> int:
    S = resolve_steps(args)
    if args.system == "plain":
        sol = series.solve_system_N(S, args.order)
    elif args.system == "weighted":
        sol = series.solve_system_weighted(S, args.order)
    else:
        sol = series.solve_system(S, args.order)
    if args.m not in sol:
        raise UsageError(f"m must be in 0..{max(sol)}")
    emit(args, S, sol[args.m].to_ints(), m=args.m, order=args.order)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    if args.list:
        for name in REGISTRY:
            print(name)
        for rel in series.Relation:
            print(f"algebraic:{rel.value}")
        return 0
    S = resolve_steps(args)
    names = args.identity or None
    plain = [n for n in names or [] if not n.startswith("algebraic:")]
    algebraic = [n.split(":", 1)[1] for n in names or [] if n.startswith("algebraic:")]
    try:
        results = run_checks(S, args.max_n, plain) if (plain or not names) else {}
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None
    for rel in algebraic:
        try:
            results[f"algebraic:{rel}"] = series.verify_algebraic(rel, max(12, args.max_n))
        except series.SeriesError as exc:
            raise UsageError(str(exc)) from None
    status = {k: ("skip" if v is None else "pass" if v else "fail") for k, v in results.items()}
    fmt = args.format or "text"
    if fmt == "json":
        doc = {"family": args.family or "custom", "params": _params(args, S, max_n=args.max_n), "results": status}
        print(json.dumps(doc))
    else:
        for k, v in status.items():
            print(f"{v.upper():4} {k}")
    failed = [k for k, v in status.items() if v == "fail"]
    if failed:
        print(json.dumps({"error": "identity failed", "identities": failed}), file=sys.stderr)
        return 1
    return 0


# ------------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--family", choices=list(FAMILIES) + ["custom"])
    common.add_argument("--steps", help='step set, e.g. "V,U1,U0,D1,D2" or "V,U2,U1,U0,D*"')
    common.add_argument("--N", type=int)
    common.add_argument("--K", type=int)
    common.add_argument("--format", choices=["json", "csv", "text"])

    parser = argparse.ArgumentParser(prog="latpath", description="Lattice paths with vertical steps.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="sequence of path counts")
    p.add_argument("--kind", choices=list(count.KINDS) + ["closed"], default="primary")
    p.add_argument("--form", choices=count.CLOSED_FORMS)
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--n", default="0..8")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", parents=[common], help="list paths")
    p.add_argument("--kind", choices=["free", "primary"], default="primary")
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--n", default="3")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("bijection", parents=[common], help="apply g, or f with --weights")
    p.add_argument("--path", required=True, help='path word, e.g. "U3 D2 U1 V U2 V3 U1 D1"')
    p.add_argument("--weights", help="comma-separated weights; maps back with f")
    p.set_defaults(func=cmd_bijection)

    p = sub.add_parser("stats", parents=[common], help="step census and expectations")
    p.add_argument("--n", default="1..5")
    p.add_argument("--no-census", dest="census", action="store_false")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("riordan", parents=[common], help="top-left block of the Riordan array")
    p.add_argument("--rows", type=int, default=8)
    p.set_defaults(func=cmd_riordan)

    p = sub.add_parser("series", parents=[common], help="solve the generating-function system")
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--order", type=int, default=10)
    p.add_argument("--system", choices=["vertical", "weighted", "plain"], default="vertical")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("verify", parents=[common], help="run named identities")
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--identity", action="append", help="run only this identity (repeatable)")
    p.add_argument("--list", action="store_true", help="list identity names")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, StepSetError, PathError, count.CountError, bijection.BijectionError,
            stats.StatsError, riordan.RiordanError, series.SeriesError, ValueError) as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return 2
    except brute.EnumerationError as exc:
        print(json.dumps({"error": "EnumerationError", "message": str(exc)}), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
