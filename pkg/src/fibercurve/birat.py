"""Coordinates of the curve/fiber-point correspondence.

A smooth family member through n+1 points with prescribed x-coordinates
corresponds to the projective point [y_0 : ... : y_n] on the fiber curve
of that configuration, and conversely.  This module recovers (a, b) from
two points, checks global consistency of a point list, and implements the
two directions of the correspondence.

The (a, b) formulas solve the linear system

    y_0^s = a x_0^{r+1} + b x_0,    y_1^s = a x_1^{r+1} + b x_1,

whose determinant x_0 x_1 (x_0^r - x_1^r) is nonzero for admissible
x-coordinates.  The normative contract is the round trip: both defining
points land back on the returned curve, exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import config as config_mod
from .config import Config
from .family import AffinePoint, FamilyCurve, contains
from .fiber import ProjPoint, build_fiber, det_form, on_fiber


class SingularSystemError(ValueError):
    """x_0^r == x_1^r: the two-point linear system has no unique solution."""


class LiftObstruction(ValueError):
    """A fiber point that does not lift to a smooth curve with the
    requested scale; ``index`` names the failing coordinate when one
    coordinate is responsible."""

    def __init__(self, reason: str, index: int | None = None):
        self.index = index
        self.reason = reason
        super().__init__(reason if index is None else f"Y_{index}: {reason}")


@dataclass(frozen=True)
class CurveWithPoints:
    curve: FamilyCurve
    points: tuple[AffinePoint, ...]

    def config(self) -> Config:
        return config_mod.validate(
            self.curve.r, self.curve.s, [p.x for p in self.points]
        )

    def verify(self) -> None:
        for idx, p in enumerate(self.points):
            if not contains(self.curve, p):
                raise ValueError(f"point {idx} is not on the curve")
        self.config()


@dataclass(frozen=True)
class ConsistencyReport:
    ok: bool
    witness: int | None  # index of the first failing point, if any
    a: Fraction
    b: Fraction


def solve_ab(
    r: int, s: int, p0: AffinePoint, p1: AffinePoint
) -> tuple[Fraction, Fraction]:
    """The unique (a, b) putting both points on y^s = x(a x^r + b)."""
    x0, y0 = p0.x, p0.y
    x1, y1 = p1.x, p1.y
    if x0 == 0 or x1 == 0:
        raise SingularSystemError("x-coordinates must be nonzero")
    delta = x0 * x1 * (x0**r - x1**r)
    if delta == 0:
        raise SingularSystemError(f"x_0^{r} == x_1^{r}: singular system")
    a = (y0**s * x1 - y1**s * x0) / delta
    b = (x0 ** (r + 1) * y1**s - x1 ** (r + 1) * y0**s) / delta
    return a, b


def consistency(r: int, s: int, points: list[AffinePoint]) -> ConsistencyReport:
    """Do all points lie on the single curve fixed by the first two?

    Checks the direct route (solve from the first two points, substitute
    the rest) and the determinant route (all 3x3 determinants vanish) and
    asserts that the two verdicts agree.
    """
    if len(points) < 3:
        raise ValueError("need at least three points")
    cfg = config_mod.validate(r, s, [p.x for p in points])
    a, b = solve_ab(r, s, points[0], points[1])
    curve = FamilyCurve(r=r, s=s, a=a, b=b)
    witness = None
    for idx in range(2, len(points)):
        if not contains(curve, points[idx]):
            witness = idx
            break
    direct_ok = witness is None

    point = ProjPoint([p.y for p in points])
    det_ok = all(
        det_form(cfg, i, point) == 0 for i in range(2, cfg.n + 1)
    )
    if direct_ok != det_ok:
        raise AssertionError(
            "direct substitution and determinant tests disagree"
        )
    return ConsistencyReport(ok=direct_ok, witness=witness, a=a, b=b)


def to_fiber_point(cwp: CurveWithPoints) -> ProjPoint:
    """[y_0 : ... : y_n] in canonical normalization; always on the fiber."""
    cwp.verify()
    point = ProjPoint([p.y for p in cwp.points])
    system = build_fiber(cwp.config())
    if not on_fiber(system, point):
        raise AssertionError("curve points did not land on the fiber")
    return point


def from_fiber_point(
    config: Config,
    point: ProjPoint,
    scale: Fraction | None = None,
) -> CurveWithPoints:
    """Lift a fiber point back to a curve with all n+1 points.

    Coordinates are read as y-values y_i = scale * Y_i; the default scale
    1/Y_0 normalizes y_0 = 1.  Because fiber membership is degree-s
    homogeneous, changing the scale moves (a, b) by an s-th power.  Raises
    LiftObstruction when the point is off the fiber, when Y_0 = 0 and no
    explicit scale was given, or when the lifted curve degenerates
    (a = 0 or b = 0).
    """
    system = build_fiber(config)
    report = on_fiber(system, point)
    if not report.ok:
        bad = next(i for i, res in report.residues if res != 0)
        raise LiftObstruction("point is not on the fiber", index=bad)
    if scale is None:
        if point[0] == 0:
            raise LiftObstruction(
                "Y_0 = 0: default normalization undefined, pass a scale",
                index=0,
            )
        scale = 1 / point[0]
    scale = Fraction(scale)
    if scale == 0:
        raise ValueError("scale must be nonzero")
    ys = [scale * c for c in point.coords]
    p0 = AffinePoint(config.alphas[0], ys[0])
    p1 = AffinePoint(config.alphas[1], ys[1])
    a, b = solve_ab(config.r, config.s, p0, p1)
    if a == 0 or b == 0:
        raise LiftObstruction(
            f"lifted parameters degenerate: (a, b) = ({a}, {b})"
        )
    curve = FamilyCurve(r=config.r, s=config.s, a=a, b=b)
    points = [AffinePoint(alpha, y) for alpha, y in zip(config.alphas, ys)]
    for idx, p in enumerate(points):
        if not contains(curve, p):
            raise LiftObstruction("coordinate inconsistent with the curve",
                                  index=idx)
    return CurveWithPoints(curve=curve, points=tuple(points))
