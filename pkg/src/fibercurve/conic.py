"""Rational parametrization of the genus-zero fiber (s = 2, n = 2).

For three prescribed x-coordinates the fiber is a single conic
A Y_0^2 + B Y_1^2 + C Y_2^2 = 0 in P^2.  Given one rational point, the
pencil of lines through it parametrizes all the others, and each conic
point lifts to a family member through the three x-coordinates.  Not
every configuration yields a solvable conic (the form can be definite);
absence within the search bound is reported honestly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .birat import CurveWithPoints, LiftObstruction, from_fiber_point
from .config import Config
from .fiber import FiberSystem, ProjPoint, build_fiber


class NoRationalPointError(RuntimeError):
    """No conic point of height within the requested search bound."""


@dataclass(frozen=True)
class ConicModel:
    A: Fraction
    B: Fraction
    C: Fraction
    base_point: ProjPoint

    def value(self, v) -> Fraction:
        return self.A * v[0] ** 2 + self.B * v[1] ** 2 + self.C * v[2] ** 2

    def polar(self, u, v) -> Fraction:
        # polar bilinear form of the diagonal quadratic
        return self.A * u[0] * v[0] + self.B * u[1] * v[1] + self.C * u[2] * v[2]


def _single_equation(system: FiberSystem) -> tuple[Fraction, Fraction, Fraction]:
    if system.n != 2 or system.config.s != 2:
        raise ValueError("conic machinery needs s = 2 and n = 2")
    eq = system.equations[0]
    return eq.A, eq.B, eq.C


def find_base_point(
    system: FiberSystem, search_height: int
) -> ProjPoint | None:
    """First conic point over primitive integer triples of bounded height.

    Deterministic order: shells on max(|y_0|, |y_1|) with y_0 >= 0, then
    lexicographic; y_2 is recovered from the equation as a nonnegative
    integer square root.  Triples whose third coordinate exceeds the
    height bound are rejected, so the scan is exhaustive over primitive
    triples of height <= search_height.
    """
    A, B, C = _single_equation(system)
    if search_height < 1:
        raise ValueError("search height must be positive")
    for shell in range(0, search_height + 1):
        for y0 in range(0, shell + 1):
            for y1 in range(-shell, shell + 1):
                if max(y0, abs(y1)) != shell:
                    continue
                if y0 == 0 and y1 < 0:
                    continue  # canonical sign
                t = -(A * y0 * y0 + B * y1 * y1)
                if C != 0:
                    t = t / C
                if t < 0 or t.denominator != 1:
                    continue
                root = isqrt(t.numerator)
                if root * root != t.numerator:
                    continue
                if root > search_height:
                    continue
                if y0 == 0 and y1 == 0 and root == 0:
                    continue
                if gcd(gcd(y0, abs(y1)), root) != 1:
                    continue
                return ProjPoint([y0, y1, root])
    return None


def _direction(model: ConicModel, t: tuple[int, int]) -> list[Fraction]:
    t0, t1 = t
    if (t0, t1) == (0, 0):
        raise ValueError("direction (0, 0) is not allowed")
    if gcd(abs(t0), abs(t1)) != 1:
        raise ValueError("direction must be a coprime pair")
    pivot = next(
        i for i, c in enumerate(model.base_point.coords) if c != 0
    )
    basis = [i for i in range(3) if i != pivot]
    d = [Fraction(0)] * 3
    d[basis[0]] = Fraction(t0)
    d[basis[1]] = Fraction(t1)
    return d


def parametrize(
    model: ConicModel, t: tuple[int, int]
) -> tuple[ProjPoint, bool]:
    """Second intersection of the conic with the line through the base
    point in direction t.

    Returns (point, tangent_flag); the tangent direction collapses back to
    the base point and is flagged.  Distinct directions give distinct
    points apart from that single degenerate case.
    """
    p = model.base_point.coords
    d = _direction(model, t)
    q_d = model.value(d)
    polar = model.polar(p, d)
    if polar == 0:
        # line tangent at the base point
        return model.base_point, True
    coords = [q_d * pc - 2 * polar * dc for pc, dc in zip(p, d)]
    point = ProjPoint(coords)
    if model.value(point.coords) != 0:
        raise AssertionError("parametrized point left the conic")
    return point, False


def _directions(limit: int | None = None):
    """Canonical coprime directions, one per +-pair, in shell order."""
    shells = range(1, limit + 1) if limit else itertools.count(1)
    for shell in shells:
        for t0 in range(-shell, shell + 1):
            for t1 in range(0, shell + 1):
                if max(abs(t0), t1) != shell:
                    continue
                if t1 == 0 and t0 < 0:
                    continue
                if gcd(abs(t0), t1) != 1:
                    continue
                yield (t0, t1)


def enumerate_curves(
    config: Config, count: int, search_height: int
) -> list[CurveWithPoints]:
    """Up to ``count`` distinct smooth members through the three prescribed
    x-coordinates.

    Streams conic points from the line pencil in a fixed order, lifts each
    with scale 1, skips points that degenerate (a = 0 or b = 0), and
    deduplicates on the exact (a, b) pair.  Deterministic: same inputs,
    same output sequence.
    """
    if config.s != 2 or config.n != 2:
        raise ValueError("enumeration needs s = 2 and n = 2")
    if count < 0:
        raise ValueError("count must be nonnegative")
    system = build_fiber(config)
    base = find_base_point(system, search_height)
    if base is None:
        A, B, C = _single_equation(system)
        raise NoRationalPointError(
            f"no rational point of height <= {search_height} on "
            f"{A} Y0^2 + {B} Y1^2 + {C} Y2^2 = 0"
        )
    model = ConicModel(*_single_equation(system), base_point=base)

    results: list[CurveWithPoints] = []
    seen: set[tuple[Fraction, Fraction]] = set()

    def try_point(point: ProjPoint) -> None:
        try:
            cwp = from_fiber_point(config, point, scale=Fraction(1))
        except LiftObstruction:
            return
        key = (cwp.curve.a, cwp.curve.b)
        if key in seen:
            return
        seen.add(key)
        results.append(cwp)

    try_point(base)
    # Each (a, b) absorbs at most four sign-flipped conic points and lift
    # failures are finite, so this budget is never the binding constraint
    # for a solvable conic; it only guards against looping forever.
    budget = 16 * (count + 2) + 64
    for t in itertools.islice(_directions(), budget):
        if len(results) >= count:
            break
        point, tangent = parametrize(model, t)
        if tangent:
            continue
        try_point(point)
    if len(results) < count:
        raise NoRationalPointError(
            f"exhausted {budget} directions with only {len(results)} "
            f"distinct curves"
        )
    return results[:count]
