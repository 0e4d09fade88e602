"""Batch command-line front end.

Subcommands: classify, prekite-eval, prekite-feasible, equiareal-scan,
rel, pompeiu, embed, centers.  Output is JSON (CSV only for the scan
table), byte-identical across repeated runs.  Exit codes: 0 success,
1 bad input, 2 not realizable (or degenerate where nondegeneracy is
required), 3 internal error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction

from .cayley import (
    RealizabilityError,
    SquaredDistanceMatrix,
    cm_det,
    inner_cm_det,
    volume_sq,
    circumradius_sq,
    facet_sdm,
)
from .centers import coincidence_report, equiareal_scan
from .exact import parse_scalar, scalar_str
from .families import TOL_FAMILY, classify
from .geometry import FT_GRADIENT_TOL, center_set, embed
from .prekite import (
    PreKite,
    apex_squared_ratio_window,
    pk_cm_det,
    pk_facet_cm,
    pk_facet_inner_cm,
    pk_inner_cm_det,
    two_apexed_feasible,
)
from .relation import (
    DistanceTuple,
    pompeiu_classify,
    pompeiu_invariants,
    relation_residual,
    solve_missing_distance,
    solve_missing_distance_squares,
)

EXIT_OK = 0
EXIT_BAD_INPUT = 1
EXIT_NOT_REALIZABLE = 2
EXIT_INTERNAL = 3


class InputError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _scalar(text: str) -> Fraction:
    try:
        return parse_scalar(text)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _number(text: str):
    """Exact scalar when the text parses as one, float otherwise."""
    try:
        return parse_scalar(text)
    except ValueError:
        try:
            return float(text)
        except ValueError:
            raise InputError("not a number: %r" % text) from None


def _jsonable(value):
    if isinstance(value, Fraction):
        return scalar_str(value)
    return float(value)


def _load_sdm(path: str) -> SquaredDistanceMatrix:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            payload = json.load(fh)
    except OSError as exc:
        raise InputError("cannot read %s: %s" % (path, exc)) from exc
    except json.JSONDecodeError as exc:
        raise InputError("malformed JSON in %s: %s" % (path, exc)) from exc
    try:
        return SquaredDistanceMatrix.from_json(payload)
    except (ValueError, TypeError) as exc:
        raise InputError("invalid matrix in %s: %s" % (path, exc)) from exc


def _require_json_format(args):
    if args.format != "json":
        raise InputError("only the scan table supports --format csv")


def _prekite_from_args(args) -> PreKite:
    u = _scalar(args.u)
    v = [_scalar(x) for x in args.v]
    if args.lengths:
        u = u * u
        v = [x * x for x in v]
    try:
        return PreKite(args.n, u, v)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def cmd_classify(args):
    _require_json_format(args)
    d = _load_sdm(args.matrix)
    tol = args.tol if args.tol is not None else TOL_FAMILY
    report = classify(d, tol=tol)
    coin = coincidence_report(d, with_floats=not args.exact, tol_center=args.tol)
    out = {"classification": report.to_json(), "coincidence": coin.to_json()}
    return _dumps(out), EXIT_OK


def _facet_row(j, c, dd, n) -> dict:
    facet_dim = n - 1
    vol2 = (-1) ** (facet_dim + 1) * c / (2**facet_dim * Fraction(math.factorial(facet_dim)) ** 2)
    degenerate = c == 0
    return {
        "j": j,
        "cm_det": scalar_str(c),
        "inner_cm_det": scalar_str(dd),
        "volume_sq": scalar_str(vol2),
        "circumradius_sq": None if degenerate else scalar_str(-dd / (2 * c)),
        "degenerate": degenerate,
    }


def cmd_prekite_eval(args):
    _require_json_format(args)
    pk = _prekite_from_args(args)
    n = pk.n
    c = pk_cm_det(pk)
    dd = pk_inner_cm_det(pk)
    degenerate = c == 0
    vol2 = (-1) ** (n + 1) * c / (2**n * Fraction(math.factorial(n)) ** 2)
    facets = []
    for j in range(n + 1):
        if n >= 3:
            fc, fd = pk_facet_cm(pk, j), pk_facet_inner_cm(pk, j)
        else:
            facet = facet_sdm(pk.to_sdm(), j)
            fc, fd = cm_det(facet), inner_cm_det(facet)
        facets.append(_facet_row(j, fc, fd, n))
    out = {
        "n": n,
        "u": scalar_str(pk.u),
        "v": [scalar_str(x) for x in pk.v],
        "cm_det": scalar_str(c),
        "inner_cm_det": scalar_str(dd),
        "volume_sq": scalar_str(vol2),
        "circumradius_sq": None if degenerate else scalar_str(-dd / (2 * c)),
        "degenerate": degenerate,
        "equiareal": len({row["cm_det"] for row in facets}) == 1,
        "facets": facets,
    }
    return _dumps(out), EXIT_NOT_REALIZABLE if degenerate else EXIT_OK


def cmd_prekite_feasible(args):
    _require_json_format(args)
    u = _scalar(args.u)
    v = _scalar(args.v)
    if args.lengths:
        u, v = u * u, v * v
    if args.n < 2 or u <= 0 or v <= 0:
        raise InputError("need n >= 2 and positive parameters")
    lo, hi = apex_squared_ratio_window(args.n)
    out = {
        "n": args.n,
        "u": scalar_str(u),
        "v": scalar_str(v),
        "squared_ratio": scalar_str(v / u),
        "window": {"lo": scalar_str(lo), "hi": scalar_str(hi), "open": True},
        "feasible": two_apexed_feasible(args.n, u, v),
    }
    return _dumps(out), EXIT_OK


_SCAN_COLUMNS = (
    "t",
    "s",
    "status",
    "x",
    "y",
    "u",
    "realizable",
    "degenerate",
    "equiareal_verified",
    "regular",
    "reason",
)


def cmd_equiareal_scan(args):
    if not 3 <= args.n <= 12:
        raise InputError("scan supports 3 <= n <= 12")
    result = equiareal_scan(args.n)
    if args.format == "csv":
        lines = [",".join(_SCAN_COLUMNS)]
        for row in result["rows"]:
            lines.append(",".join(str(row.get(col, "")) for col in _SCAN_COLUMNS))
        return "\n".join(lines), EXIT_OK
    return _dumps(result), EXIT_OK


def _parse_known(text: str, n: int):
    parts = [p.strip() for p in text.split(",") if p.strip() != ""]
    values = [None if p == "?" else _number(p) for p in parts]
    if len(values) not in (n, n + 1):
        raise InputError("expected n or n+1 comma-separated distances")
    return values


def cmd_rel(args):
    _require_json_format(args)
    t0 = _number(args.t0)
    if args.mode == "solve":
        if args.known is None:
            raise InputError("rel solve needs --known")
        known = _parse_known(args.known, args.n)
        try:
            solutions = solve_missing_distance(args.n, t0, known)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
        flat = [v for v in known if v is not None]
        squares = solve_missing_distance_squares(
            args.n, t0 * t0, [v * v for v in flat]
        )
        out = {
            "n": args.n,
            "t0": _jsonable(t0),
            "known": [_jsonable(v) for v in flat],
            "solutions": [float(v) for v in solutions],
            "solution_squares": [_jsonable(q) for q in squares],
            "count": len(solutions),
        }
        return _dumps(out), EXIT_OK
    if args.t is None:
        raise InputError("rel verify needs --t")
    values = _parse_known(args.t, args.n)
    if any(v is None for v in values) or len(values) != args.n + 1:
        raise InputError("rel verify needs all n+1 distances")
    try:
        dt = DistanceTuple(args.n, t0, tuple(values))
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    residual = relation_residual(dt)
    tol = args.tol if args.tol is not None else 1e-9
    scale = max([float(t0)] + [float(v) for v in values]) ** 4
    out = {
        "n": args.n,
        "t0": _jsonable(t0),
        "t": [_jsonable(v) for v in values],
        "residual": _jsonable(residual),
        "zero_within_tol": abs(float(residual)) <= tol * max(scale, 1e-300),
    }
    return _dumps(out), EXIT_OK


def cmd_pompeiu(args):
    _require_json_format(args)
    a, x, y, z = (_number(v) for v in (args.a, args.x, args.y, args.z))
    tol = args.tol if args.tol is not None else 1e-12
    try:
        verdict = pompeiu_classify(a, x, y, z, tol=tol)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    g, h = pompeiu_invariants(a, x, y, z)
    out = {
        "a": _jsonable(a),
        "x": _jsonable(x),
        "y": _jsonable(y),
        "z": _jsonable(z),
        "g": _jsonable(g),
        "h": _jsonable(h),
        "verdict": verdict,
    }
    return _dumps(out), EXIT_OK


def cmd_embed(args):
    _require_json_format(args)
    d = _load_sdm(args.matrix)
    s = embed(d)
    out = {
        "n": s.n,
        "vertices": [[float(x) for x in row] for row in s.vertices],
        "max_rel_error": s.max_rel_error,
    }
    return _dumps(out), EXIT_OK


def cmd_centers(args):
    _require_json_format(args)
    d = _load_sdm(args.matrix)
    s = embed(d)
    tol = args.tol if args.tol is not None else FT_GRADIENT_TOL
    cs = center_set(s, ft_tol=tol)
    out = {"n": s.n}
    out.update(cs.to_json())
    return _dumps(out), EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--exact", action="store_true", help="exact output only; skip float cross-checks")
    common.add_argument("--tol", type=float, default=None, help="override the command's float tolerance")
    common.add_argument("--format", choices=("json", "csv"), default="json", help="output format (csv: scan table only)")
    common.add_argument("--lengths", action="store_true", help="numeric edge inputs are plain lengths; square them on ingestion")
    common.add_argument("--seed", type=int, default=0, help="seed for sampling commands (current commands are deterministic)")

    parser = _Parser(prog="simplexkite", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="apex census, family membership, and center coincidences for a matrix file")
    p.add_argument("matrix", help="path to a squared-distance matrix JSON file")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("prekite-eval", parents=[common], help="exact determinants, volume, and circumradius of PK[n;u;v], with per-facet values")
    p.add_argument("n", type=int)
    p.add_argument("u")
    p.add_argument("v", nargs="+")
    p.set_defaults(func=cmd_prekite_eval)

    p = sub.add_parser("prekite-feasible", parents=[common], help="feasibility window test for the single-odd-edge pre-kite")
    p.add_argument("n", type=int)
    p.add_argument("u")
    p.add_argument("v")
    p.set_defaults(func=cmd_prekite_feasible)

    p = sub.add_parser("equiareal-scan", parents=[common], help="equal-facet-volume candidates over all (t, s) splits at dimension n")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_equiareal_scan)

    p = sub.add_parser("rel", parents=[common], help="solve or verify the regular-simplex distance relation")
    p.add_argument("mode", choices=("solve", "verify"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t0", required=True)
    p.add_argument("--known", help="solve: comma-separated known distances, '?' for the open slot")
    p.add_argument("--t", help="verify: comma-separated distances to all n+1 vertices")
    p.set_defaults(func=cmd_rel)

    p = sub.add_parser("pompeiu", parents=[common], help="classify three distances against an equilateral triangle")
    p.add_argument("a")
    p.add_argument("x")
    p.add_argument("y")
    p.add_argument("z")
    p.set_defaults(func=cmd_pompeiu)

    p = sub.add_parser("embed", parents=[common], help="coordinates realizing a matrix file")
    p.add_argument("matrix")
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("centers", parents=[common], help="the four centers of the simplex in a matrix file")
    p.add_argument("matrix")
    p.set_defaults(func=cmd_centers)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        text, code = args.func(args)
        if text:
            print(text)
        return code
    except InputError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_BAD_INPUT
    except RealizabilityError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_NOT_REALIZABLE
    except (ValueError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_BAD_INPUT
    except Exception as exc:  # pragma: no cover - defensive
        print("internal error: %s" % exc, file=sys.stderr)
        return EXIT_INTERNAL


def entry():  # console-script wrapper
    sys.exit(main())
