"""Command-line surface over the library: verb-noun subcommands with JSON on
stdout (or --out), deterministic seeds, and budget guards.

Exit codes: 0 success, 2 precondition violation, 3 budget exceeded, 4 I/O
error.  On failure a structured {"error": {...}} JSON is printed and the
process exits nonzero.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional

from . import asymptotic as asym
from . import bounds as bd
from . import codes as cd
from . import surfaces as sf
from . import towers as tw

DEFAULT_SEED = 1

EXIT_OK = 0
EXIT_PRECONDITION = 2
EXIT_BUDGET = 3
EXIT_IO = 4


class CliError(Exception):
    def __init__(self, code: int, kind: str, message: str):
        super().__init__(message)
        self.code = code
        self.kind = kind


def _parse_ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError as exc:
        raise CliError(EXIT_PRECONDITION, "parse", f"bad integer list {text!r}: {exc}")


def _parse_range(text: str) -> range:
    """Either a single integer or lo..hi (inclusive)."""
    try:
        if ".." in text:
            lo, hi = text.split("..")
            return range(int(lo), int(hi) + 1)
        v = int(text)
        return range(v, v + 1)
    except ValueError as exc:
        raise CliError(EXIT_PRECONDITION, "parse", f"bad range {text!r}: {exc}")


def _surface_from_args(args) -> sf.SurfaceModel:
    kind = args.surface.lower()
    if kind in ("p2", "projectiveplane"):
        return sf.projective_plane()
    if kind in ("p1xp1", "quadric"):
        return sf.quadric_p1xp1()
    if kind in ("hirzebruch", "sigma"):
        if args.e is None:
            raise CliError(EXIT_PRECONDITION, "surface",
                           "--e is required for a Hirzebruch surface")
        return sf.hirzebruch(args.e)
    raise CliError(EXIT_PRECONDITION, "surface",
                   f"unknown surface {args.surface!r} (use p2, p1xp1, hirzebruch)")


def _grid_from_args(args, q: int):
    if args.points != "grid":
        return None
    a = _parse_ints(args.grid_a) if args.grid_a else tuple(range(q))
    b = _parse_ints(args.grid_b) if args.grid_b else tuple(range(q))
    return (a, b)


def _emit(args, payload, text: Optional[str] = None) -> int:
    body = text if text is not None else json.dumps(payload, indent=2) + "\n"
    if getattr(args, "out", None):
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(body)
        except OSError as exc:
            raise CliError(EXIT_IO, "io", str(exc))
    else:
        sys.stdout.write(body)
    return EXIT_OK


# -- code ---------------------------------------------------------------------

def cmd_code_build(args) -> int:
    surface = _surface_from_args(args)
    divisor = surface.divisor(*_parse_ints(args.divisor))
    grid = _grid_from_args(args, args.q)
    code = cd.build_code(surface, divisor, args.q, args.points, grid)
    if args.format == "csv":
        return _emit(args, None, code.generator_csv())
    return _emit(args, code.to_json_dict())


def cmd_code_distance(args) -> int:
    try:
        code = cd.load_code(args.infile)
    except OSError as exc:
        raise CliError(EXIT_IO, "io", str(exc))
    d = cd.exact_min_distance(code, args.budget, args.threads)
    payload = code.to_json_dict()
    payload["d"] = d
    return _emit(args, payload)


# -- bounds -------------------------------------------------------------------

def cmd_bounds(args) -> int:
    surface = _surface_from_args(args)
    divisor = surface.divisor(*_parse_ints(args.divisor))
    grid = _grid_from_args(args, args.q)
    report = bd.parameter_report(
        surface, divisor, args.q,
        gamma=args.gamma, tag=args.points, grid=grid,
        exact_budget=args.budget if args.exact else None,
        epsilon=Fraction(args.epsilon) if args.epsilon else None,
        xi=args.xi, workers=args.threads)
    if args.lift > 1:
        report = bd.lifted_bound(report, args.lift)
    return _emit(args, report.to_json_dict())


# -- tower --------------------------------------------------------------------

def cmd_tower_check(args) -> int:
    cert = tw.hyperelliptic_product_certificate(
        args.q, args.g1, args.g2, args.rho, args.seed)
    return _emit(args, cert.to_json_dict())


def cmd_tower_search(args) -> int:
    certs = tw.search_parameters(args.q, _parse_range(args.g1),
                                 _parse_range(args.g2), _parse_range(args.rho),
                                 args.seed, args.threads)
    return _emit(args, [c.to_json_dict() for c in certs])


# -- asym ---------------------------------------------------------------------

def _code_point_json(cp: asym.CodePoint) -> dict:
    return {"delta": asym.rational_to_json(cp.delta),
            "R": asym.rational_to_json(cp.r)}


def _asym_point_json(pt: asym.AsymptoticPoint) -> dict:
    return {"kappa": asym.rational_to_json(pt.kappa),
            "chi": asym.rational_to_json(pt.chi)}


def cmd_asym_map(args) -> int:
    kappa_s, chi_s = args.point.split(",")
    pt = asym.asym_point(asym.parse_rational(kappa_s), asym.parse_rational(chi_s))
    cp = asym.phi_g(args.q, args.g, pt)
    payload = _code_point_json(cp)
    payload.update({f"in_domain_{k}": v
                    for k, v in asym.domain_membership(args.q, pt).items()})
    payload.update(asym.code_bound_checks(args.q, cp))
    return _emit(args, payload)


def cmd_asym_polygon(args) -> int:
    poly = asym.polygon_image(args.q, args.g)
    payload = {}
    for name, val in poly.items():
        payload[name] = (_asym_point_json(val) if isinstance(val, asym.AsymptoticPoint)
                         else _code_point_json(val))
    return _emit(args, payload)


def cmd_asym_diagram(args) -> int:
    if not args.out:
        raise CliError(EXIT_PRECONDITION, "args", "--out is required for diagram")
    try:
        asym.emit_diagram(args.q, args.g, args.grid, args.out, args.svg)
    except OSError as exc:
        raise CliError(EXIT_IO, "io", str(exc))
    sys.stdout.write(json.dumps({"written": args.out, "svg": args.svg}) + "\n")
    return EXIT_OK


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="surfcodes",
        description="evaluation codes on algebraic surfaces: build codes, "
                    "compare distance bounds, certify class-field towers, "
                    "map asymptotic invariants")
    sub = p.add_subparsers(dest="command", required=True)

    def add_surface_args(sp):
        sp.add_argument("--surface", required=True,
                        help="p2 | p1xp1 | hirzebruch")
        sp.add_argument("--e", type=int, default=None,
                        help="Hirzebruch parameter e >= 0")
        sp.add_argument("--q", type=int, required=True)
        sp.add_argument("--divisor", required=True,
                        help="comma-separated coordinates in the NS basis")
        sp.add_argument("--points", default="all", choices=("all", "grid"))
        sp.add_argument("--grid-a", default=None,
                        help="comma-separated F_q indices (grid rows)")
        sp.add_argument("--grid-b", default=None,
                        help="comma-separated F_q indices (grid cols)")

    code = sub.add_parser("code", help="build codes / exact distances")
    code_sub = code.add_subparsers(dest="action", required=True)
    cb = code_sub.add_parser("build")
    add_surface_args(cb)
    cb.add_argument("--format", default="json", choices=("json", "csv"))
    cb.add_argument("--out", default=None)
    cb.set_defaults(func=cmd_code_build)
    cdist = code_sub.add_parser("distance")
    cdist.add_argument("--in", dest="infile", required=True)
    cdist.add_argument("--budget", type=int, default=cd.DEFAULT_DISTANCE_BUDGET)
    cdist.add_argument("--threads", type=int, default=1)
    cdist.add_argument("--out", default=None)
    cdist.set_defaults(func=cmd_code_distance)

    bounds = sub.add_parser("bounds", help="bound comparison report")
    add_surface_args(bounds)
    bounds.add_argument("--gamma", default="universal",
                        choices=("universal", "universal-affine"))
    bounds.add_argument("--exact", action="store_true",
                        help="attach brute-force (k, d) when within budget")
    bounds.add_argument("--budget", type=int, default=cd.DEFAULT_DISTANCE_BUDGET)
    bounds.add_argument("--lift", type=int, default=1,
                        help="lift the report along a totally split cover of "
                             "this degree")
    bounds.add_argument("--epsilon", default=None,
                        help="Seshadri lower bound (rational) for Hansen S1")
    bounds.add_argument("--xi", type=int, default=None,
                        help="global-generation twist for Hansen S2")
    bounds.add_argument("--threads", type=int, default=1)
    bounds.add_argument("--out", default=None)
    bounds.set_defaults(func=cmd_bounds)

    tower = sub.add_parser("tower", help="class-field tower certificates")
    tower_sub = tower.add_subparsers(dest="action", required=True)
    tc = tower_sub.add_parser("check")
    for name in ("q", "g1", "g2", "rho"):
        tc.add_argument(f"--{name}", type=int, required=True)
    tc.add_argument("--seed", type=int, default=DEFAULT_SEED)
    tc.add_argument("--out", default=None)
    tc.set_defaults(func=cmd_tower_check)
    ts = tower_sub.add_parser("search")
    ts.add_argument("--q", type=int, required=True)
    for name in ("g1", "g2", "rho"):
        ts.add_argument(f"--{name}", required=True, help="int or lo..hi")
    ts.add_argument("--seed", type=int, default=DEFAULT_SEED)
    ts.add_argument("--threads", type=int, default=1)
    ts.add_argument("--out", default=None)
    ts.set_defaults(func=cmd_tower_search)

    asymp = sub.add_parser("asym", help="asymptotic domain maps")
    asym_sub = asymp.add_subparsers(dest="action", required=True)
    am = asym_sub.add_parser("map")
    am.add_argument("--q", type=int, required=True)
    am.add_argument("--g", type=int, required=True)
    am.add_argument("--point", required=True, help="kappa,chi as rationals")
    am.add_argument("--out", default=None)
    am.set_defaults(func=cmd_asym_map)
    ap = asym_sub.add_parser("polygon")
    ap.add_argument("--q", type=int, required=True)
    ap.add_argument("--g", type=int, required=True)
    ap.add_argument("--out", default=None)
    ap.set_defaults(func=cmd_asym_polygon)
    ad = asym_sub.add_parser("diagram")
    ad.add_argument("--q", type=int, required=True)
    ad.add_argument("--g", type=int, required=True)
    ad.add_argument("--grid", type=int, default=20)
    ad.add_argument("--out", required=True)
    ad.add_argument("--svg", default=None)
    ad.set_defaults(func=cmd_asym_diagram)
    return p


def _error_json(kind: str, message: str) -> str:
    return json.dumps({"error": {"kind": kind, "message": message}}) + "\n"


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except CliError as exc:
        sys.stdout.write(_error_json(exc.kind, str(exc)))
        return exc.code
    except (cd.BudgetExceeded, tw.TooLarge) as exc:
        sys.stdout.write(_error_json("budget", str(exc)))
        return EXIT_BUDGET
    except OSError as exc:
        sys.stdout.write(_error_json("io", str(exc)))
        return EXIT_IO
    except (ValueError, ZeroDivisionError) as exc:
        sys.stdout.write(_error_json("precondition", str(exc)))
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
