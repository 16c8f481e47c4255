"""Command-line interface.

One executable, subcommand per operation, exact JSON in and out.  Exit
codes: 0 success (verification verbs: fully passed), 1 mathematical
failure (point off fiber, inadmissible configuration, fixture mismatch,
no conic point within the bound), 2 usage error (bad flags, malformed
input).  All numbers cross the boundary as exact "p/q" strings.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import birat, conic, family, fiber, fixtures, jsonio, search
from .arith import format_rational, parse_rational
from .config import InvalidConfigError, classify, validate, violations

EXIT_OK = 0
EXIT_MATH = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


class MathFailure(Exception):
    pass


def _read_payload(value: str) -> dict:
    """Accept a path, "-" for stdin, or a literal JSON object."""
    try:
        if value.strip().startswith(("{", "[")):
            return json.loads(value)
        if value == "-":
            return json.load(sys.stdin)
        with open(value, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read input {value!r}: {exc}") from exc


def _load_config(value: str):
    obj = _read_payload(value)
    try:
        return jsonio.config_from_obj(obj)
    except InvalidConfigError as exc:
        raise MathFailure(
            json.dumps({"valid": False, "violations": exc.problems})
        ) from exc
    except (KeyError, ValueError) as exc:
        raise UsageError(f"malformed config: {exc}") from exc


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def _parse_affine(text: str) -> family.AffinePoint:
    try:
        if text.strip().startswith("{"):
            return jsonio.point_from_obj(json.loads(text))
        x_s, y_s = text.split(",")
        return family.AffinePoint(parse_rational(x_s), parse_rational(y_s))
    except (ValueError, KeyError) as exc:
        raise UsageError(f"malformed point {text!r}: {exc}") from exc


def _default_workers() -> int:
    raw = os.environ.get("FIBERCURVE_WORKERS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


# --- verb implementations ---------------------------------------------------


def _cmd_validate(args) -> int:
    obj = _read_payload(args.config)
    try:
        alphas = [parse_rational(a) for a in obj["alphas"]]
        r, s = int(obj["r"]), int(obj["s"])
    except (KeyError, ValueError) as exc:
        raise UsageError(f"malformed config: {exc}") from exc
    problems = violations(r, s, alphas)
    _emit({"valid": not problems, "violations": problems})
    return EXIT_OK if not problems else EXIT_MATH


def _cmd_fiber_build(args) -> int:
    cfg = _load_config(args.config)
    system = fiber.build_fiber(cfg)
    if args.format == "display":
        print(jsonio.format_system_display(system, style=args.style))
    else:
        _emit(jsonio.fiber_system_to_obj(system))
    return EXIT_OK


def _cmd_fiber_verify(args) -> int:
    cfg = _load_config(args.config)
    system = fiber.build_fiber(cfg)
    point = jsonio.proj_point_from_obj(_read_payload(args.point))
    if len(point) != cfg.n + 1:
        raise UsageError("point length does not match configuration")
    report = fiber.on_fiber(system, point)
    result = {
        "on_fiber": report.ok,
        "residues": [
            {"i": i, "residue": format_rational(res)}
            for i, res in report.residues
        ],
    }
    if report.ok:
        result["smooth"] = fiber.smooth_at(system, point)
    _emit(result)
    return EXIT_OK if report.ok and result.get("smooth", True) else EXIT_MATH


def _cmd_fiber_genus(args) -> int:
    print(fiber.fiber_genus(args.s, args.n))
    return EXIT_OK


def _cmd_gonality_bound(args) -> int:
    print(fiber.gonality_lower_bound(args.s, args.n))
    return EXIT_OK


def _cmd_family_genus(args) -> int:
    print(family.family_genus(args.r, args.s))
    return EXIT_OK


def _cmd_classify(args) -> int:
    regime, n0 = classify(args.s, args.n)
    _emit({"regime": regime.value, "n0": n0})
    return EXIT_OK


def _cmd_solve_ab(args) -> int:
    p0 = _parse_affine(args.p0)
    p1 = _parse_affine(args.p1)
    try:
        a, b = birat.solve_ab(args.r, args.s, p0, p1)
    except birat.SingularSystemError as exc:
        raise MathFailure(str(exc)) from exc
    _emit({"a": format_rational(a), "b": format_rational(b)})
    return EXIT_OK


def _cmd_push(args) -> int:
    cwp = jsonio.cwp_from_obj(_read_payload(args.input))
    try:
        point = birat.to_fiber_point(cwp)
    except (ValueError, InvalidConfigError) as exc:
        raise MathFailure(str(exc)) from exc
    _emit(jsonio.proj_point_to_obj(point))
    return EXIT_OK


def _cmd_lift(args) -> int:
    cfg = _load_config(args.config)
    point = jsonio.proj_point_from_obj(_read_payload(args.point))
    scale = parse_rational(args.scale) if args.scale else None
    try:
        cwp = birat.from_fiber_point(cfg, point, scale=scale)
    except birat.LiftObstruction as exc:
        raise MathFailure(
            json.dumps({"obstruction": exc.reason, "index": exc.index})
        ) from exc
    _emit(jsonio.cwp_to_obj(cwp))
    return EXIT_OK


def _cmd_conic_enumerate(args) -> int:
    cfg = _load_config(args.config)
    try:
        curves = conic.enumerate_curves(cfg, args.count, args.height)
    except conic.NoRationalPointError as exc:
        raise MathFailure(str(exc)) from exc
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    for cwp in curves:
        print(json.dumps(jsonio.cwp_to_obj(cwp)))
    return EXIT_OK


def _cmd_search_ab(args) -> int:
    cfg = _load_config(args.config)
    workers = args.workers if args.workers else _default_workers()
    report = search.search_ab(cfg, args.height, workers=workers)
    obj = jsonio.search_report_to_obj(report)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(obj, fh, indent=2)
        _emit(
            {
                "hits": len(report.hits),
                "search_space_size": report.search_space_size,
                "out": args.out,
            }
        )
    else:
        _emit(obj)
    return EXIT_OK


def _cmd_trivial_points(args) -> int:
    try:
        cert = fiber.trivial_points(args.r, args.s, args.n)
    except fiber.OrderCapExceeded as exc:
        raise MathFailure(str(exc)) from exc
    _emit(jsonio.certificate_to_obj(cert, include_tuples=args.full))
    return EXIT_OK


def _cmd_fixtures(args) -> int:
    try:
        fixture = fixtures.load(args.name)
    except KeyError as exc:
        raise UsageError(str(exc)) from exc
    if not args.verify:
        _emit(jsonio.cwp_to_obj(fixture.cwp))
        return EXIT_OK
    try:
        report = fixtures.verify(fixture)
    except fixtures.FixtureMismatchError as exc:
        raise MathFailure(str(exc)) from exc
    _emit(
        {
            "name": report.name,
            "checks": [
                {"check": label, "detail": detail}
                for label, detail in report.checks
            ],
            "printed_reading": report.printed_reading,
            "scalars": [format_rational(s) for s in report.scalars],
            "verified": True,
        }
    )
    return EXIT_OK


# --- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fibercurve",
        description="Exact toolkit for the family y^s = x(a x^r + b) and "
        "its fiber curves.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("validate", help="check a configuration")
    p.add_argument("--config", required=True)
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("fiber-build", help="construct the fiber equations")
    p.add_argument("--config", required=True)
    p.add_argument("--format", choices=("json", "display"), default="json")
    p.add_argument("--style", choices=("shared", "monic"), default="shared")
    p.set_defaults(func=_cmd_fiber_build)

    p = sub.add_parser("fiber-verify", help="test a point against the fiber")
    p.add_argument("--config", required=True)
    p.add_argument("--point", required=True)
    p.set_defaults(func=_cmd_fiber_verify)

    p = sub.add_parser("fiber-genus", help="genus of the fiber curve")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_fiber_genus)

    p = sub.add_parser("gonality-bound", help="gonality lower bound")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_gonality_bound)

    p = sub.add_parser("family-genus", help="genus of a family member")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.set_defaults(func=_cmd_family_genus)

    p = sub.add_parser("classify", help="fiber regime and n0 threshold")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("solve-ab", help="recover (a, b) from two points")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--p0", required=True, help='point as "x,y" or JSON')
    p.add_argument("--p1", required=True)
    p.set_defaults(func=_cmd_solve_ab)

    p = sub.add_parser("push", help="curve with points to fiber point")
    p.add_argument("--input", required=True)
    p.set_defaults(func=_cmd_push)

    p = sub.add_parser("lift", help="fiber point to curve with points")
    p.add_argument("--config", required=True)
    p.add_argument("--point", required=True)
    p.add_argument("--scale", default=None, help='rational "p/q"; default 1/Y_0')
    p.set_defaults(func=_cmd_lift)

    p = sub.add_parser("conic-enumerate", help="stream curves from the "
                       "genus-zero fiber (s=2, n=2)")
    p.add_argument("--config", required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--height", type=int, default=64)
    p.set_defaults(func=_cmd_conic_enumerate)

    p = sub.add_parser("search-ab", help="height-bounded exhaustive search")
    p.add_argument("--config", required=True)
    p.add_argument("--height", type=int, required=True)
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_search_ab)

    p = sub.add_parser("trivial-points", help="certify root-of-unity points")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--full", action="store_true",
                   help="include every verified tuple in the output")
    p.set_defaults(func=_cmd_trivial_points)

    p = sub.add_parser("fixtures", help="load or verify an embedded dataset")
    p.add_argument("name", choices=fixtures.FIXTURE_NAMES)
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=_cmd_fixtures)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(json.dumps({"error": "usage", "message": str(exc)}),
              file=sys.stderr)
        return EXIT_USAGE
    except MathFailure as exc:
        print(json.dumps({"error": "math", "message": str(exc)}),
              file=sys.stderr)
        return EXIT_MATH
    except InvalidConfigError as exc:
        print(json.dumps({"error": "math", "message": str(exc),
                          "violations": exc.problems}), file=sys.stderr)
        return EXIT_MATH


if __name__ == "__main__":
    sys.exit(main())
