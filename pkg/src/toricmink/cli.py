"""Command line interface.

Exit codes: 0 success, 2 unreadable or malformed polygon file (and usage
errors), 3 q is not a prime power or has no supported field, 4 polygon not
inside [0, q-2]^2, 5 search budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources
from pathlib import Path

from .bounds import NotPrimePowerError, bound_report, threshold_exceptional, threshold_plain
from .code import PolygonOutsideBoxError, SearchBudgetExceeded, build_table, min_distance
from .field import UnsupportedFieldError, make_field
from .geometry import LatticePolygon, lattice_points, normalize, twice_area
from .minkowski import MinkowskiWitness, classify, full_minkowski_length, has_exceptional_maximal

SCHEMA = 1

EXIT_PARSE = 2
EXIT_PRIME_POWER = 3
EXIT_OUTSIDE = 4
EXIT_BUDGET = 5

BUNDLED = ("ex1_pentagon", "ex2_triangle", "ex3_hexagon")


class PolygonParseError(ValueError):
    pass


def parse_polygon_text(text: str) -> LatticePolygon:
    """Parse either the ``x y`` per line format or a JSON array of pairs."""
    stripped = text.strip()
    try:
        if stripped.startswith("["):
            pts = [(int(x), int(y)) for x, y in json.loads(stripped)]
        else:
            pts = []
            for line in text.splitlines():
                line = line.split("#", 1)[0].strip()
                if line:
                    x, y = line.replace(",", " ").split()
                    pts.append((int(x), int(y)))
        return normalize(pts)
    except (ValueError, TypeError) as exc:
        raise PolygonParseError(str(exc)) from exc


def load_polygon(source: str) -> LatticePolygon:
    """Read a polygon from a path, or from a bundled name such as ``ex1_pentagon``."""
    path = Path(source)
    if not path.exists() and source in BUNDLED:
        text = resources.files("toricmink.data").joinpath(f"{source}.txt").read_text()
    else:
        try:
            text = path.read_text()
        except OSError as exc:
            raise PolygonParseError(str(exc)) from exc
    return parse_polygon_text(text)


def witness_json(w: MinkowskiWitness) -> dict:
    return {
        "exceptional": [list(v) for v in w.exceptional.vertices] if w.exceptional else None,
        "segments": [[v[0], v[1], m] for v, m in w.segments.entries],
        "anchor": list(w.anchor),
    }


def info(P: LatticePolygon) -> dict:
    total, interior, boundary = lattice_points(P)
    L, witness = full_minkowski_length(P)
    flag, ex_witness = has_exceptional_maximal(P, L)
    ta = twice_area(P)
    return {
        "schema": SCHEMA,
        "vertices": [list(v) for v in P.vertices],
        "twice_area": ta,
        "area": f"{ta / 2:g}",
        "total_points": total,
        "interior": interior,
        "boundary": boundary,
        "L": L,
        "classification": classify(P).value,
        "exceptional_maximal": flag,
        "witness": witness_json(ex_witness if flag else witness),
    }


def thresholds(P: LatticePolygon) -> dict:
    L, _ = full_minkowski_length(P)
    flag, _ = has_exceptional_maximal(P, L)
    ta = twice_area(P)
    exc = threshold_exceptional(ta, L) if L >= 1 else None
    plain = threshold_plain(ta, L) if L >= 1 else None
    return {
        "schema": SCHEMA,
        "L": L,
        "twice_area": ta,
        "exceptional_maximal": flag,
        "threshold_exceptional": exc,
        "threshold_plain": plain,
        "applicable": "exceptional" if flag else "plain",
        "applicable_threshold": exc if flag else plain,
    }


def _emit(data: dict, as_json: bool, lines: list[str]) -> None:
    if as_json:
        print(json.dumps(data, sort_keys=True))
    else:
        print("\n".join(lines))


def cmd_info(args) -> int:
    P = load_polygon(args.polygon)
    if P.dim < 2:
        print(f"warning: degenerate polygon of dimension {P.dim}", file=sys.stderr)
    d = info(P)
    w = d["witness"]
    lines = [
        f"vertices            {d['vertices']}",
        f"area                {d['area']} (twice area {d['twice_area']})",
        f"lattice points      {d['total_points']} ({d['interior']} interior, {d['boundary']} boundary)",
        f"full length L       {d['L']}",
        f"classification      {d['classification']}",
        f"exceptional maximal {d['exceptional_maximal']}",
        f"witness             exceptional={w['exceptional']} segments={w['segments']} anchor={w['anchor']}",
    ]
    _emit(d, args.json, lines)
    return 0


def cmd_bounds(args) -> int:
    P = load_polygon(args.polygon)
    r = bound_report(P, args.q)
    d = {"schema": SCHEMA, **r.to_json()}
    name = "general (with 2 sqrt q term)" if r.exceptional_case else "no exceptional triangle"
    lines = [
        f"q                   {r.q}  (block length {r.block_length}, dimension {r.dimension})",
        f"L, twice area       {r.L}, {r.twice_area}",
        f"branch              {r.branch}: {name}",
        f"threshold q0        {r.threshold_q}",
        f"valid at q          {r.bound_valid_at_q}",
        f"d lower bound       {r.d_lower}",
    ]
    if r.sharpened_threshold is not None:
        lines.append(f"sharpened q0        {r.sharpened_threshold} (established for this polygon)")
    _emit(d, args.json, lines)
    return 0


def cmd_mindist(args) -> int:
    P = load_polygon(args.polygon)
    F = make_field(args.q)
    T = build_table(P, F)
    res = min_distance(T, workers=args.workers, budget=None if args.force else args.budget)
    d = {"schema": SCHEMA, **res.to_json()}
    lines = [
        f"q, n, block length  {res.q}, {res.n}, {res.block_length}",
        f"min distance        {res.min_distance}",
        f"max zeros           {res.max_zeros}",
        f"witness             {list(res.witness)}  (monomials {list(T.monomials)})",
        f"elapsed             {res.elapsed_ms} ms on {res.worker_count} worker(s)",
    ]
    _emit(d, args.json, lines)
    return 0


def cmd_thresholds(args) -> int:
    d = thresholds(load_polygon(args.polygon))
    lines = [
        f"L, twice area       {d['L']}, {d['twice_area']}",
        f"exceptional q0      {d['threshold_exceptional']}",
        f"plain q0            {d['threshold_plain']}",
        f"applicable          {d['applicable']} -> q >= {d['applicable_threshold']}",
    ]
    _emit(d, args.json, lines)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")
    common.add_argument("polygon", help="polygon file, or one of: " + ", ".join(BUNDLED))

    parser = argparse.ArgumentParser(
        prog="toricmink",
        description="Full Minkowski length and toric surface code bounds for lattice polygons.",
    )
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", parents=[common], help="lattice invariants and L(P)")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("bounds", parents=[common], help="minimum distance lower bound at q")
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("mindist", parents=[common], help="exact minimum distance by search")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--budget", type=int, default=2 * 10**9, help="max class-row products")
    p.add_argument("--force", action="store_true", help="ignore the search budget")
    p.set_defaults(func=cmd_mindist)

    p = sub.add_parser("thresholds", parents=[common], help="q thresholds of both bounds")
    p.set_defaults(func=cmd_thresholds)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except PolygonParseError as exc:
        print(f"error: cannot read polygon: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (NotPrimePowerError, UnsupportedFieldError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRIME_POWER
    except PolygonOutsideBoxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_OUTSIDE
    except SearchBudgetExceeded as exc:
        print(f"error: {exc}; pass --force to run anyway", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
