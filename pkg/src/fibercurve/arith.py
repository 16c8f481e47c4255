"""Exact scalar arithmetic.

Everything downstream computes over arbitrary-precision rationals; the
scalar type is ``fractions.Fraction`` (always lowest terms, positive
denominator), re-exported here as ``Rational``.  This module adds exact
integer s-th roots, rational s-th-power testing, the "p/q" string codec
used by all JSON interfaces, and arithmetic in the cyclotomic ring
Q[x]/(Phi_d) needed for root-of-unity point verification.

No floating point anywhere: results are bit-exact by construction.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

Rational = Fraction

_MINUS_SIGNS = ("-", "−")  # accept ASCII hyphen and the unicode minus


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" (or bare "p") with an optional leading minus sign."""
    s = text.strip()
    negative = False
    if s[:1] in _MINUS_SIGNS:
        negative = True
        s = s[1:].strip()
    if "/" in s:
        num_s, den_s = s.split("/", 1)
        value = Fraction(int(num_s), int(den_s))
    else:
        value = Fraction(int(s))
    return -value if negative else value


def format_rational(q: Fraction) -> str:
    """Render as "p/q", or "p" when the denominator is 1."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def integer_nth_root(m: int, s: int) -> int | None:
    """Exact s-th root of a nonnegative integer.

    Returns t with t**s == m, or None when m is not a perfect s-th power.
    Pure integer Newton iteration seeded from the bit length; never a
    floor approximation and never floating point.
    """
    if s < 2:
        raise ValueError(f"exponent must be >= 2, got {s}")
    if m < 0:
        raise ValueError("m must be nonnegative")
    if m < 2:
        return m
    # 2**ceil(bits/s) strictly exceeds m**(1/s), so Newton descends.
    x = 1 << ((m.bit_length() + s - 1) // s)
    while True:
        t = ((s - 1) * x + m // x ** (s - 1)) // s
        if t >= x:
            break
        x = t
    return x if x**s == m else None


def is_sth_power(q: Fraction, s: int) -> Fraction | None:
    """Rational t with t**s == q, if one exists.

    For even s the input must be nonnegative and the nonnegative root is
    returned; for odd s the sign transfers to the root.  Numerator and
    denominator are tested separately, which is sound because q is stored
    in lowest terms.
    """
    if s < 2:
        raise ValueError(f"exponent must be >= 2, got {s}")
    q = Fraction(q)
    if q < 0:
        if s % 2 == 0:
            return None
        root = is_sth_power(-q, s)
        return None if root is None else -root
    num_root = integer_nth_root(q.numerator, s)
    if num_root is None:
        return None
    den_root = integer_nth_root(q.denominator, s)
    if den_root is None:
        return None
    return Fraction(num_root, den_root)


# ---------------------------------------------------------------------------
# Cyclotomic ring arithmetic
# ---------------------------------------------------------------------------


def _poly_div_exact(num: list[int], den: tuple[int, ...]) -> list[int]:
    # Exact division in Z[x] by a monic divisor; remainder must vanish.
    num = list(num)
    deg = len(den) - 1
    quot = [0] * (len(num) - deg)
    for k in range(len(quot) - 1, -1, -1):
        c = num[k + deg]
        quot[k] = c
        if c:
            for j, dj in enumerate(den):
                num[k + j] -= c * dj
    if any(num[:deg]):
        raise ArithmeticError("polynomial division left a remainder")
    return quot


@lru_cache(maxsize=None)
def cyclotomic_polynomial(d: int) -> tuple[int, ...]:
    """Coefficients of Phi_d, lowest degree first (monic, integral)."""
    if d < 1:
        raise ValueError("order must be positive")
    poly = [-1] + [0] * (d - 1) + [1]  # x**d - 1
    for e in range(1, d):
        if d % e == 0:
            poly = _poly_div_exact(poly, cyclotomic_polynomial(e))
    return tuple(poly)


def euler_phi(d: int) -> int:
    return len(cyclotomic_polynomial(d)) - 1


def _reduce_mod_cyclotomic(order: int, coeffs: list[Fraction]) -> list[Fraction]:
    phi_poly = cyclotomic_polynomial(order)
    deg = len(phi_poly) - 1
    coeffs = list(coeffs)
    for k in range(len(coeffs) - 1, deg - 1, -1):
        c = coeffs[k]
        if c:
            base = k - deg
            for j, pj in enumerate(phi_poly):
                coeffs[base + j] -= c * pj
    return coeffs[:deg]


class CyclotomicElement:
    """Element of Q(zeta_d) in the power basis 1, zeta, ..., zeta^(phi(d)-1).

    Coordinates are exact rationals; products are reduced modulo the d-th
    cyclotomic polynomial.  Immutable, hashable, safe to share.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs) -> None:
        if order < 1:
            raise ValueError("order must be positive")
        phi = euler_phi(order)
        values = [Fraction(c) for c in coeffs]
        if len(values) > phi:
            values = _reduce_mod_cyclotomic(order, values)
        values.extend([Fraction(0)] * (phi - len(values)))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(values))

    def __setattr__(self, name, value):
        raise AttributeError("CyclotomicElement is immutable")

    @classmethod
    def zero(cls, order: int) -> "CyclotomicElement":
        return cls(order, [])

    @classmethod
    def one(cls, order: int) -> "CyclotomicElement":
        return cls(order, [Fraction(1)])

    @classmethod
    def zeta(cls, order: int) -> "CyclotomicElement":
        """The distinguished primitive d-th root of unity."""
        return cls(order, [Fraction(0), Fraction(1)])

    @classmethod
    def from_rational(cls, order: int, q) -> "CyclotomicElement":
        return cls(order, [Fraction(q)])

    def _check_order(self, other: "CyclotomicElement") -> None:
        if self.order != other.order:
            raise ValueError(
                f"order mismatch: {self.order} vs {other.order}"
            )

    def _coerce(self, other) -> "CyclotomicElement":
        if isinstance(other, CyclotomicElement):
            self._check_order(other)
            return other
        return CyclotomicElement.from_rational(self.order, other)

    def __add__(self, other) -> "CyclotomicElement":
        other = self._coerce(other)
        return CyclotomicElement(
            self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)]
        )

    __radd__ = __add__

    def __neg__(self) -> "CyclotomicElement":
        return CyclotomicElement(self.order, [-a for a in self.coeffs])

    def __sub__(self, other) -> "CyclotomicElement":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "CyclotomicElement":
        return self._coerce(other) - self

    def __mul__(self, other) -> "CyclotomicElement":
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        prod = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        return CyclotomicElement(self.order, prod)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "CyclotomicElement":
        if exponent < 0:
            raise ValueError("negative powers not supported")
        result = CyclotomicElement.one(self.order)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, CyclotomicElement):
            return self.order == other.order and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == CyclotomicElement.from_rational(self.order, other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __repr__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(format_rational(c))
            elif k == 1:
                terms.append(f"{format_rational(c)}*z")
            else:
                terms.append(f"{format_rational(c)}*z^{k}")
        body = " + ".join(terms) if terms else "0"
        return f"CyclotomicElement(d={self.order}: {body})"
