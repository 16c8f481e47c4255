"""Admissible x-coordinate configurations.

A configuration holds n+1 prescribed x-coordinates alpha_0..alpha_n for
points on a family member.  Admissibility requires every alpha_i nonzero,
pairwise distinct, and with pairwise distinct r-th powers; exactly these
conditions make the specialized fiber equations nondegenerate.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction


class InvalidConfigError(ValueError):
    """Raised with the full list of admissibility violations."""

    def __init__(self, problems: list[str]):
        self.problems = list(problems)
        super().__init__("; ".join(problems))


@dataclass(frozen=True)
class Config:
    r: int
    s: int
    alphas: tuple[Fraction, ...]

    @property
    def n(self) -> int:
        return len(self.alphas) - 1


def violations(r: int, s: int, alphas) -> list[str]:
    """Every admissibility violation, each naming the offending index/pair."""
    problems: list[str] = []
    if r < 1:
        problems.append(f"r must be >= 1, got {r}")
    if s < 2:
        problems.append(f"s must be >= 2, got {s}")
    values = [Fraction(a) for a in alphas]
    if len(values) < 2:
        problems.append("need at least two x-coordinates")
    for i, a in enumerate(values):
        if a == 0:
            problems.append(f"alpha[{i}] is zero")
    if r >= 1:
        for i in range(len(values)):
            for j in range(i + 1, len(values)):
                if values[i] == values[j]:
                    problems.append(f"alpha[{i}] == alpha[{j}]")
                elif values[i] ** r == values[j] ** r:
                    problems.append(
                        f"alpha[{i}]^{r} == alpha[{j}]^{r} with distinct bases"
                    )
    return problems


def validate(r: int, s: int, alphas) -> Config:
    """Build a Config, or raise InvalidConfigError listing every violation."""
    problems = violations(r, s, alphas)
    if problems:
        raise InvalidConfigError(problems)
    return Config(r=r, s=s, alphas=tuple(Fraction(a) for a in alphas))


class Regime(enum.Enum):
    GENUS_ZERO = "genus-zero"
    GENUS_ONE = "genus-one"
    GENUS_GE_TWO = "genus-at-least-two"


def classify(s: int, n: int) -> tuple[Regime, int]:
    """Fiber-genus regime for (s, n) plus the finiteness threshold n_0.

    The fiber is rational exactly at (s, n) = (2, 2), an elliptic curve at
    (2, 3) and (3, 2), and of general type everywhere else; n_0 is 4 for
    s = 2 and 3 otherwise.
    """
    if n < 2 or s < 2:
        raise ValueError("need n >= 2 and s >= 2")
    n0 = 4 if s == 2 else 3
    if (s, n) == (2, 2):
        return Regime.GENUS_ZERO, n0
    if (s, n) in ((2, 3), (3, 2)):
        return Regime.GENUS_ONE, n0
    return Regime.GENUS_GE_TWO, n0
