"""JSON codecs for every exchanged type.

All numeric payloads are exact "p/q" strings (bare "p" for integers);
floats never appear.  Parsing is the exact inverse of emission for the
types the CLI exchanges.
"""

from __future__ import annotations

from .arith import format_rational, parse_rational
from .birat import CurveWithPoints
from .config import Config, validate
from .family import AffinePoint, FamilyCurve
from .fiber import (
    FiberEquation,
    FiberSystem,
    ProjPoint,
    TrivialPointCertificate,
)
from .search import EVIDENCE_NOTE, ClassCountTable, SearchReport


def curve_to_obj(curve: FamilyCurve) -> dict:
    return {
        "r": curve.r,
        "s": curve.s,
        "a": format_rational(curve.a),
        "b": format_rational(curve.b),
    }


def curve_from_obj(obj: dict) -> FamilyCurve:
    return FamilyCurve(
        r=int(obj["r"]),
        s=int(obj["s"]),
        a=parse_rational(obj["a"]),
        b=parse_rational(obj["b"]),
    )


def point_to_obj(p: AffinePoint) -> dict:
    return {"x": format_rational(p.x), "y": format_rational(p.y)}


def point_from_obj(obj: dict) -> AffinePoint:
    return AffinePoint(x=parse_rational(obj["x"]), y=parse_rational(obj["y"]))


def config_to_obj(config: Config) -> dict:
    return {
        "r": config.r,
        "s": config.s,
        "alphas": [format_rational(a) for a in config.alphas],
    }


def config_from_obj(obj: dict) -> Config:
    return validate(
        int(obj["r"]),
        int(obj["s"]),
        [parse_rational(a) for a in obj["alphas"]],
    )


def proj_point_to_obj(point: ProjPoint) -> dict:
    return {"coords": [format_rational(c) for c in point.coords]}


def proj_point_from_obj(obj: dict) -> ProjPoint:
    return ProjPoint([parse_rational(c) for c in obj["coords"]])


def fiber_system_to_obj(system: FiberSystem) -> dict:
    return {
        "config": config_to_obj(system.config),
        "equations": [
            {
                "i": eq.i,
                "A": format_rational(eq.A),
                "B": format_rational(eq.B),
                "C": format_rational(eq.C),
                "scale": format_rational(eq.scale),
            }
            for eq in system.equations
        ],
    }


def fiber_system_from_obj(obj: dict) -> FiberSystem:
    config = config_from_obj(obj["config"])
    equations = tuple(
        FiberEquation(
            i=int(e["i"]),
            A=parse_rational(e["A"]),
            B=parse_rational(e["B"]),
            C=parse_rational(e["C"]),
            scale=parse_rational(e.get("scale", "1")),
        )
        for e in obj["equations"]
    )
    return FiberSystem(config=config, equations=equations)


def cwp_to_obj(cwp: CurveWithPoints) -> dict:
    return {
        "curve": curve_to_obj(cwp.curve),
        "points": [point_to_obj(p) for p in cwp.points],
    }


def cwp_from_obj(obj: dict) -> CurveWithPoints:
    return CurveWithPoints(
        curve=curve_from_obj(obj["curve"]),
        points=tuple(point_from_obj(p) for p in obj["points"]),
    )


def search_report_to_obj(report: SearchReport) -> dict:
    return {
        "config": config_to_obj(report.config),
        "height_bound": report.height_bound,
        "hits": [cwp_to_obj(h) for h in report.hits],
        "search_space_size": report.search_space_size,
        "elapsed_ms": report.elapsed_ms,
        "complete": report.complete,
        "workers": report.workers,
        "note": report.note,
    }


def search_report_from_obj(obj: dict) -> SearchReport:
    return SearchReport(
        config=config_from_obj(obj["config"]),
        height_bound=int(obj["height_bound"]),
        hits=tuple(cwp_from_obj(h) for h in obj["hits"]),
        search_space_size=int(obj["search_space_size"]),
        elapsed_ms=int(obj["elapsed_ms"]),
        complete=bool(obj["complete"]),
        workers=int(obj["workers"]),
        note=obj.get("note", EVIDENCE_NOTE),
    )


def class_counts_to_obj(table: ClassCountTable) -> dict:
    return {
        "config": config_to_obj(table.config),
        "height_bound": table.height_bound,
        "per_index": list(table.per_index),
        "search_space_size": table.search_space_size,
    }


def certificate_to_obj(
    cert: TrivialPointCertificate, include_tuples: bool = False
) -> dict:
    obj = {
        "r": cert.r,
        "s": cert.s,
        "n": cert.n,
        "cyclotomic_order": cert.order,
        "total_space": cert.total_space,
        "verified_count": len(cert.verified),
        "sampled": cert.sampled,
    }
    if include_tuples:
        obj["tuples"] = [
            {"x_exponents": list(jt), "y_exponents": list(it)}
            for jt, it in cert.verified
        ]
    return obj


# ---------------------------------------------------------------------------
# Display formatting in the two conventional scalings
# ---------------------------------------------------------------------------


def format_system_display(system: FiberSystem, style: str = "shared") -> str:
    """Human-readable equation layout.

    style "shared": left side is the raw shared cofactor C times Y_i^s and
    the right side lists the raw A, B cofactors verbatim.  style "monic":
    left side is Y_i^s alone, right side -A/C and -B/C.
    """
    s = system.config.s
    lines = []
    for eq in system.equations:
        raw_a, raw_b, raw_c = eq.raw()
        if style == "shared":
            lines.append(
                f"({format_rational(raw_c)}) Y_{eq.i}^{s} = "
                f"({format_rational(raw_a)}) Y_0^{s} + "
                f"({format_rational(raw_b)}) Y_1^{s}"
            )
        elif style == "monic":
            p = -eq.A / eq.C
            q = -eq.B / eq.C
            lines.append(
                f"Y_{eq.i}^{s} = ({format_rational(p)}) Y_0^{s} + "
                f"({format_rational(q)}) Y_1^{s}"
            )
        else:
            raise ValueError(f"unknown style {style!r}")
    return "\n".join(lines)
