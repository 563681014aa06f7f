"""Command-line front end.

Subcommands mirror the library: gfc, paths, polyomino, cone-verify,
canonical, hilbert, selftest. Results go to stdout (json by default,
csv or text on request), diagnostics to stderr. Exit codes: 0 success,
1 validation error, 2 search-cap refusal, 3 selftest failure.

Counts and determinant values are printed as decimal strings so that
arbitrarily large results survive any JSON consumer; small exponent
entries stay plain numbers.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import brackets, canonical, cone, paths, polyomino, selftest
from .caps import SearchCapExceeded


class CliError(Exception):
    """Validation problem; maps to exit code 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CliError(message)


def _int_list(text: str) -> tuple[int, ...]:
    try:
        values = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise CliError(f"expected a comma-separated integer list, got {text!r}") from None
    if not values:
        raise CliError("expected a nonempty integer list")
    return values


def build_parser() -> _Parser:
    parser = _Parser(prog="fusscat", description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=("json", "csv", "text"), default="json")
    parser.add_argument("--max-volume", type=int, default=None,
                        help="cap on enumeration volume estimates")
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("gfc", help="generalized Fuss-Catalan bracket")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--t", type=int, required=True)
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--method", choices=("all",) + brackets.GFC_METHODS, default="all")

    s = sub.add_parser("paths", help="bounded monotone path counting")
    s.add_argument("--a", type=_int_list, required=True)
    s.add_argument("--b", type=_int_list, default=None)
    s.add_argument("--method", choices=("dp", "det", "enumerate"), default="dp")

    s = sub.add_parser("polyomino", help="staircase polyomino data")
    s.add_argument("--u", type=_int_list, required=True)
    s.add_argument("--r", type=_int_list, required=True)
    s.add_argument("--render", action="store_true")

    s = sub.add_parser("cone-verify", help="certify a staircase cone's halfspaces")
    s.add_argument("--u", type=_int_list, required=True)
    s.add_argument("--r", type=_int_list, required=True)

    s = sub.add_parser("canonical", help="canonical-module generators")
    s.add_argument("--n", type=int)
    s.add_argument("--t", type=int)
    s.add_argument("--p", type=int)
    s.add_argument("--u", type=_int_list)
    s.add_argument("--r", type=_int_list)
    s.add_argument("--dmax", type=int, default=None,
                   help="search degree bound (general staircase search)")

    s = sub.add_parser("hilbert", help="Hilbert function and numerator")
    s.add_argument("--u", type=_int_list, required=True)
    s.add_argument("--r", type=_int_list, required=True)
    s.add_argument("--dmax", type=int, required=True)

    sub.add_parser("selftest", help="replay all reference values")
    return parser


def _spec(args) -> polyomino.StairSpec:
    try:
        return polyomino.StairSpec(args.u, args.r)
    except ValueError as exc:
        raise CliError(str(exc)) from None


def _run_gfc(args) -> dict:
    if args.method == "all":
        values = {m: brackets.gfc(args.n, args.t, args.p, m, args.max_volume)
                  for m in brackets.GFC_METHODS}
        agree = len(set(values.values())) == 1
        return {
            "value": str(values["det"]),
            "methods_agree": agree,
            "per_method": {m: str(v) for m, v in values.items()},
        }
    value = brackets.gfc(args.n, args.t, args.p, args.method, args.max_volume)
    return {"value": str(value), "method": args.method}


def _run_paths(args) -> dict:
    b = args.b if args.b is not None else (0,) * len(args.a)
    bounds = paths.HeightBounds(args.a, b)
    if args.method == "dp":
        return {"count": str(paths.count_paths_dp(bounds)), "method": "dp"}
    if args.method == "det":
        return {"count": str(paths.count_paths_det(bounds)), "method": "det"}
    seqs = paths.enumerate_height_sequences(bounds, args.max_volume)
    return {
        "count": str(len(seqs)),
        "method": "enumerate",
        "sequences": [list(s) for s in seqs],
    }


def _run_polyomino(args) -> dict:
    spec = _spec(args)
    P = polyomino.stair(spec)
    out = {
        "spec": polyomino.format_stair_spec(spec),
        "cell_count": len(P),
        "cells": [list(c) for c in P.sorted_cells()],
        "vertex_count": len(polyomino.vertex_set(P)),
        "krull_dim": polyomino.krull_dim(P),
        "convex": polyomino.is_convex(P),
        "inner_interval_count": len(polyomino.inner_intervals(P)),
    }
    if args.render:
        out["render"] = polyomino.render_ascii(P)
    return out


def _run_canonical(args) -> dict:
    closed_form = args.n is not None or args.t is not None or args.p is not None
    if closed_form:
        if args.u or args.r:
            raise CliError("give either --n/--t/--p or --u/--r, not a mixture")
        if None in (args.n, args.t, args.p):
            raise CliError("the closed form needs all three of --n, --t, --p")
        gens = canonical.stair_generators(args.n, args.t, args.p, args.max_volume)
        return {
            "n": args.n, "t": args.t, "p": args.p,
            "cm_type": str(len(gens)),
            "generators": [g.as_json_dict() for g in gens],
        }
    if not args.u or not args.r:
        raise CliError("general search needs --u and --r")
    if args.dmax is None:
        raise CliError("general search needs --dmax")
    spec = _spec(args)
    found = canonical.minimal_generators_search(spec, args.dmax, args.max_volume)
    m = spec.breaks()[-1]
    return {
        "spec": polyomino.format_stair_spec(spec),
        "degree_max": args.dmax,
        "count": str(len(found)),
        "generators": [{"x": list(z[:m]), "y": list(z[m:])} for z in found],
    }


def _run_cone_verify(args) -> dict:
    return cone.verify_h_representation(_spec(args))


def _run_hilbert(args) -> dict:
    spec = _spec(args)
    values = [canonical.hilbert_function(spec, d, args.max_volume)
              for d in range(args.dmax + 1)]
    numerator = canonical.hilbert_numerator(spec, args.dmax, args.max_volume)
    return {
        "spec": polyomino.format_stair_spec(spec),
        "dimension": polyomino.krull_dim(polyomino.stair(spec)),
        "hilbert_function": [str(v) for v in values],
        "numerator": numerator,
    }


def _run_selftest(args, out) -> int:
    results = selftest.run_all()
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        print(f"{status} criterion {res.number}: {res.name}", file=out)
        if not res.passed:
            print(f"     {res.detail}", file=sys.stderr)
        print(f"     ({res.seconds:.2f}s)", file=sys.stderr)
    failed = [r.number for r in results if not r.passed]
    if failed:
        print(f"selftest FAILED on criteria {failed}", file=sys.stderr)
        return 3
    print(f"selftest passed all {len(results)} criteria", file=out)
    return 0


def _flatten_for_csv(doc: dict, prefix="") -> list[tuple[str, str]]:
    rows = []
    for key, value in doc.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            rows.extend(_flatten_for_csv(value, name + "."))
        elif isinstance(value, list):
            rows.append((name, ";".join(json.dumps(v, separators=(",", ":")) for v in value)))
        else:
            rows.append((name, str(value)))
    return rows


def _emit(doc: dict, fmt: str, out):
    if fmt == "json":
        json.dump(doc, out, indent=2, sort_keys=False)
        out.write("\n")
    elif fmt == "csv":
        print("key,value", file=out)
        for key, value in _flatten_for_csv(doc):
            value = value.replace('"', '""')
            print(f'{key},"{value}"', file=out)
    else:
        for key, value in _flatten_for_csv(doc):
            print(f"{key}: {value}", file=out)


def main(argv=None) -> int:
    out = sys.stdout
    try:
        args = build_parser().parse_args(argv)
        if args.command == "selftest":
            return _run_selftest(args, out)
        handler = {
            "gfc": _run_gfc,
            "paths": _run_paths,
            "polyomino": _run_polyomino,
            "cone-verify": _run_cone_verify,
            "canonical": _run_canonical,
            "hilbert": _run_hilbert,
        }[args.command]
        doc = handler(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except SearchCapExceeded as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 2
    _emit(doc, args.format, out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
