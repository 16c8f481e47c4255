"""Fiber curves X_{a_n} in P^n and their defining diagonal forms.

A family member y^s = x(a x^r + b) turns each point (x_j, y_j) into the
linear relation y_j^s = a x_j^{r+1} + b x_j.  For any three indices
(0, 1, i) this forces

    det [[x_0,       x_1,       x_i      ],
         [x_0^{r+1}, x_1^{r+1}, x_i^{r+1}],
         [y_0^s,     y_1^s,     y_i^s    ]]  =  0,

because the bottom row is a times row 2 plus b times row 1.  Expanding
along the bottom row gives the diagonal form

    A_i Y_0^s + B_i Y_1^s + C_i Y_i^s,
    A_i = x_1 x_i (x_i^r - x_1^r),
    B_i = x_0 x_i (x_0^r - x_i^r),
    C_i = x_0 x_1 (x_1^r - x_0^r).

Specializing x_j to the configuration values alpha_j yields the n-1
equations (i = 2..n) cutting out the fiber curve X_{a_n} in P^n, a smooth
complete intersection of degree-s hypersurfaces for admissible
configurations.  This module builds those systems, evaluates the
determinant form, tests membership and smoothness of points, computes the
genus and the gonality lower bound, and certifies the root-of-unity points
of the unspecialized ambient variety.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .arith import CyclotomicElement
from .config import Config
from .linalg import clear_denominators, matrix_rank


class ProjPoint:
    """Point of P^n stored in canonical form.

    Canonical means: coordinates cleared to a primitive integer vector
    whose first nonzero entry is positive.  Equality and hashing are exact.
    """

    __slots__ = ("coords",)

    def __init__(self, coords) -> None:
        values = [Fraction(c) for c in coords]
        if not values or all(v == 0 for v in values):
            raise ValueError("projective point needs a nonzero coordinate")
        ints = clear_denominators(values)
        g = 0
        for v in ints:
            g = gcd(g, abs(v))
        ints = [v // g for v in ints]
        lead = next(v for v in ints if v != 0)
        if lead < 0:
            ints = [-v for v in ints]
        object.__setattr__(self, "coords", tuple(Fraction(v) for v in ints))

    def __setattr__(self, name, value):
        raise AttributeError("ProjPoint is immutable")

    def __len__(self) -> int:
        return len(self.coords)

    def __getitem__(self, i: int) -> Fraction:
        return self.coords[i]

    def __iter__(self):
        return iter(self.coords)

    def __eq__(self, other) -> bool:
        if isinstance(other, ProjPoint):
            return self.coords == other.coords
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coords)

    def __repr__(self) -> str:
        inner = " : ".join(str(c.numerator) for c in self.coords)
        return f"ProjPoint[{inner}]"


@dataclass(frozen=True)
class FiberEquation:
    """Normalized equation A Y_0^s + B Y_1^s + C Y_i^s = 0.

    Coefficients are integer-cleared, gcd-reduced, with C > 0.  ``scale``
    restores the raw cofactor triple: raw = scale * (A, B, C).
    """

    i: int
    A: Fraction
    B: Fraction
    C: Fraction
    scale: Fraction

    def raw(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.A * self.scale, self.B * self.scale, self.C * self.scale)


@dataclass(frozen=True)
class FiberSystem:
    config: Config
    equations: tuple[FiberEquation, ...]

    @property
    def n(self) -> int:
        return self.config.n


@dataclass(frozen=True)
class MembershipReport:
    ok: bool
    residues: tuple[tuple[int, Fraction], ...]

    def __bool__(self) -> bool:
        return self.ok


def raw_coefficients(
    config: Config, i: int
) -> tuple[Fraction, Fraction, Fraction]:
    """Unnormalized cofactor triple (A_i, B_i, C_i) for equation i."""
    if not 2 <= i <= config.n:
        raise ValueError(f"equation index must be in 2..{config.n}, got {i}")
    r = config.r
    a0, a1, ai = config.alphas[0], config.alphas[1], config.alphas[i]
    A = a1 * ai * (ai**r - a1**r)
    B = a0 * ai * (a0**r - ai**r)
    C = a0 * a1 * (a1**r - a0**r)
    return A, B, C


def _normalize_triple(
    triple: tuple[Fraction, Fraction, Fraction]
) -> tuple[tuple[Fraction, Fraction, Fraction], Fraction]:
    ints = clear_denominators(triple)
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    ints = [v // g for v in ints]
    if ints[2] < 0:
        ints = [-v for v in ints]
    normalized = tuple(Fraction(v) for v in ints)
    scale = triple[2] / normalized[2]
    return normalized, scale


def build_fiber(config: Config) -> FiberSystem:
    """The n-1 specialized diagonal equations of X_{a_n}.

    Config admissibility guarantees every coefficient is nonzero.  Each
    triple is integer-cleared, reduced by its gcd, and sign-normalized so
    that C > 0; the normalization scalar is retained.
    """
    if config.n < 2:
        raise ValueError("fiber systems need n >= 2")
    equations = []
    for i in range(2, config.n + 1):
        raw = raw_coefficients(config, i)
        if any(c == 0 for c in raw):
            raise AssertionError(
                f"degenerate coefficient in equation {i}; config not admissible"
            )
        (A, B, C), scale = _normalize_triple(raw)
        equations.append(FiberEquation(i=i, A=A, B=B, C=C, scale=scale))
    return FiberSystem(config=config, equations=tuple(equations))


def det_form(
    config: Config, i: int, point: ProjPoint, row_power: int | None = None
) -> Fraction:
    """Evaluate the 3x3 determinant with rows (alpha, alpha^row_power, Y^s).

    The default row_power is r+1, the power actually occurring in the
    curve relation; with it the expansion along the bottom row reproduces
    the fiber equation exactly (same sign).  Passing row_power=r gives the
    lower-degree variant, which for r = 1 has two equal rows and therefore
    vanishes identically in Y.
    """
    if not 2 <= i <= config.n:
        raise ValueError(f"equation index must be in 2..{config.n}, got {i}")
    if len(point) != config.n + 1:
        raise ValueError("point length does not match configuration")
    power = config.r + 1 if row_power is None else row_power
    s = config.s
    a = (config.alphas[0], config.alphas[1], config.alphas[i])
    b = (a[0] ** power, a[1] ** power, a[2] ** power)
    c = (point[0] ** s, point[1] ** s, point[i] ** s)
    return (
        a[0] * (b[1] * c[2] - b[2] * c[1])
        - a[1] * (b[0] * c[2] - b[2] * c[0])
        + a[2] * (b[0] * c[1] - b[1] * c[0])
    )


def on_fiber(system: FiberSystem, point: ProjPoint) -> MembershipReport:
    """Exact membership of a projective point, with per-equation residues."""
    if len(point) != system.n + 1:
        raise ValueError("point length does not match system")
    s = system.config.s
    y0 = point[0] ** s
    y1 = point[1] ** s
    residues = []
    ok = True
    for eq in system.equations:
        value = eq.A * y0 + eq.B * y1 + eq.C * point[eq.i] ** s
        residues.append((eq.i, value))
        if value != 0:
            ok = False
    return MembershipReport(ok=ok, residues=tuple(residues))


def fiber_genus(s: int, n: int) -> int:
    """Genus of the smooth complete intersection of n-1 degree-s forms in P^n.

    From the canonical degree: 2g - 2 = s^{n-1} ((n-1)s - n - 1).
    """
    if n < 2 or s < 2:
        raise ValueError("need n >= 2 and s >= 2")
    numerator = s ** (n - 1) * ((n - 1) * s - n - 1)
    if numerator % 2 != 0:
        raise AssertionError("canonical degree is odd")
    return 1 + numerator // 2


def gonality_lower_bound(s: int, n: int) -> int:
    """Complete-intersection gonality bound (s-1) s^{n-2}."""
    if n < 2 or s < 2:
        raise ValueError("need n >= 2 and s >= 2")
    return (s - 1) * s ** (n - 2)


def jacobian_matrix(
    system: FiberSystem, point: ProjPoint
) -> list[list[Fraction]]:
    """Rows of partial derivatives of the n-1 forms at the point."""
    s = system.config.s
    n = system.n
    rows = []
    for eq in system.equations:
        row = [Fraction(0)] * (n + 1)
        row[0] = s * eq.A * point[0] ** (s - 1)
        row[1] = s * eq.B * point[1] ** (s - 1)
        row[eq.i] = s * eq.C * point[eq.i] ** (s - 1)
        rows.append(row)
    return rows


def smooth_at(system: FiberSystem, point: ProjPoint) -> bool:
    """True iff the Jacobian at a fiber point has full rank n-1."""
    report = on_fiber(system, point)
    if not report.ok:
        raise ValueError("point is not on the fiber")
    return matrix_rank(jacobian_matrix(system, point)) == system.n - 1


# ---------------------------------------------------------------------------
# Root-of-unity points of the ambient variety
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TrivialPointCertificate:
    """Record of verified root-of-unity points.

    Each tuple pairs X-exponents (j_0..j_n, powers of zeta_r) with
    Y-exponents (i_0..i_n, powers of zeta_s); for every listed pair all
    n-1 unspecialized forms were evaluated in the cyclotomic ring of order
    lcm(r, s) and found to be exactly zero.  ``sampled`` marks runs where
    the tuple space exceeded the cap and only the lexicographic prefix was
    enumerated.
    """

    r: int
    s: int
    n: int
    order: int
    total_space: int
    verified: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]
    sampled: bool


class OrderCapExceeded(ValueError):
    pass


def trivial_points(
    r: int,
    s: int,
    n: int,
    order_cap: int = 30,
    tuple_cap: int = 100_000,
) -> TrivialPointCertificate:
    """Certify that root-of-unity coordinate tuples satisfy every form.

    Candidate points set X_j = zeta_r^{j_j} and Y_j = zeta_s^{i_j}; the
    forms are evaluated symbolically in Q(zeta_d), d = lcm(r, s).  Orders
    beyond order_cap are refused outright.  Tuple spaces beyond tuple_cap
    are sampled by lexicographic prefix and the certificate says so.
    """
    if r < 1 or s < 1:
        raise ValueError("need r >= 1 and s >= 1")
    if n < 2:
        raise ValueError("need n >= 2")
    d = lcm(r, s)
    if d > order_cap:
        raise OrderCapExceeded(
            f"cyclotomic order {d} exceeds the cap {order_cap}; refusing"
        )
    one = CyclotomicElement.one(d)
    zeta = CyclotomicElement.zeta(d)
    powers = [one]
    for _ in range(d):
        powers.append(powers[-1] * zeta)
    if powers[d] != one:
        raise AssertionError("generator does not have order d")

    x_root = [powers[(d // r) * j] for j in range(r)]
    y_root = [powers[(d // s) * i] for i in range(s)]
    x_pow_r = [v**r for v in x_root]
    y_pow_s = [v**s for v in y_root]

    total_space = r ** (n + 1) * s ** (n + 1)
    sampled = total_space > tuple_cap
    budget = min(total_space, tuple_cap)

    verified = []
    count = 0
    for jt in itertools.product(range(r), repeat=n + 1):
        if count >= budget:
            break
        X = [x_root[j] for j in jt]
        Xr = [x_pow_r[j] for j in jt]
        coeffs = []
        for i in range(2, n + 1):
            A = X[1] * X[i] * (Xr[i] - Xr[1])
            B = X[0] * X[i] * (Xr[0] - Xr[i])
            C = X[0] * X[1] * (Xr[1] - Xr[0])
            coeffs.append((i, A, B, C))
        for it in itertools.product(range(s), repeat=n + 1):
            if count >= budget:
                break
            count += 1
            ys = [y_pow_s[i2] for i2 in it]
            for i, A, B, C in coeffs:
                value = A * ys[0] + B * ys[1] + C * ys[i]
                if not value.is_zero():
                    raise AssertionError(
                        f"form {i} does not vanish at X-exponents {jt}, "
                        f"Y-exponents {it}"
                    )
            verified.append((jt, it))
    return TrivialPointCertificate(
        r=r,
        s=s,
        n=n,
        order=d,
        total_space=total_space,
        verified=tuple(verified),
        sampled=sampled,
    )
