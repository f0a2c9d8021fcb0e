"""One-parameter families from the Legendre-curve construction.

For E: y^2 = x^3 + a x + b, the curves d y^2 = x^3 + A(t) x + B(t) with
t in P^1(F), d in F^* share the 2-torsion module of E.  Three shapes
occur, depending on which of a, b vanish:

    ab != 0:  A = a(1 + (J-1)t^2),  B = b(1 + 3t - 3(J-1)t^2 - (J-1)t^3),
              J = 4a^3 / (4a^3 + 27b^2)
    b = 0:    A = a(1 - 3a t^2),    B = 2a^2 t (1 + a t^2)
    a = 0:    A = 3b t,             B = b(1 - b t^3)

The point t = oo is the leading-coefficient limit (t = 1/s, rescale by
s^2, s^3, set s = 0), which is a twist of the affine family's limit.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field as dc_field

from .arith import PrimeField, field_inverse, field_of
from .curve import EllipticCurve, SingularCurveError, weierstrass_discriminant
from .mod2 import class_table, class_over_fp, class_set_fp

INFINITY = "inf"


class SingularLegendreError(ValueError):
    pass


class Shape(enum.Enum):
    GENERIC = "ab!=0"
    B_ZERO = "b=0"
    A_ZERO = "a=0"


def shape_of(E: EllipticCurve) -> Shape:
    if not E.b:
        return Shape.B_ZERO
    if not E.a:
        return Shape.A_ZERO
    return Shape.GENERIC


@dataclass(frozen=True)
class Param3Input:
    curve: EllipticCurve
    t: object = 0  # field element or INFINITY
    d: object = 1

    def __post_init__(self):
        if not self.curve.field(self.d):
            raise ValueError("twist parameter d must be nonzero")


def _check_lambda(lam):
    if lam == 0 or lam == 1:
        raise SingularLegendreError("lambda must not be 0 or 1")


def legendre_to_weierstrass(lam):
    """(a4, a6) with y^2 = x^3 + a4 x + a6 isomorphic to y^2 = x(x-1)(x-lambda)."""
    _check_lambda(lam)
    F = field_of(lam)
    a4 = -(lam ** 2 - lam + 1) * field_inverse(F(3))
    a6 = -(2 * lam ** 3 - 3 * lam ** 2 - 3 * lam + 2) * field_inverse(F(27))
    return a4, a6


def legendre_j(lam):
    """256 (lambda^2 - lambda + 1)^3 / (lambda^2 (lambda - 1)^2)."""
    _check_lambda(lam)
    return 256 * (lam ** 2 - lam + 1) ** 3 * field_inverse(lam ** 2 * (lam - 1) ** 2)


def legendre_j_numerator(lam, j):
    """The degree-6 numerator of j(E_lambda) - j, coefficients as displayed."""
    return (256 - 768 * lam + (1536 - j) * lam ** 2 + (2 * j - 1792) * lam ** 3
            + (1536 - j) * lam ** 4 - 768 * lam ** 5 + 256 * lam ** 6)


def legendre_1728_factored(lam):
    """64 (lambda - 2)^2 (lambda + 1)^2 (2 lambda - 1)^2."""
    return 64 * (lam - 2) ** 2 * (lam + 1) ** 2 * (2 * lam - 1) ** 2


def _affine_coeffs(E: EllipticCurve, t):
    a, b = E.a, E.b
    shape = shape_of(E)
    if shape is Shape.B_ZERO:
        return a * (1 - 3 * a * t ** 2), 2 * a ** 2 * t * (1 + a * t ** 2)
    if shape is Shape.A_ZERO:
        return 3 * b * t, b * (1 - b * t ** 3)
    m = E.j * field_inverse(E.field(1728)) - 1  # J - 1
    return a * (1 + m * t ** 2), b * (1 + 3 * t - 3 * m * t ** 2 - m * t ** 3)


def _infinity_coeffs(E: EllipticCurve):
    a, b = E.a, E.b
    shape = shape_of(E)
    if shape is Shape.B_ZERO:
        return -3 * a ** 2, 2 * a ** 3
    if shape is Shape.A_ZERO:
        return E.field.zero, -b ** 2
    m = E.j * field_inverse(E.field(1728)) - 1
    return a * m, -b * m


def section3_coeffs(inp: Param3Input):
    """(alpha, beta) of the twisted member, without a nonsingularity check."""
    E = inp.curve
    F = E.field
    if isinstance(inp.t, str) and inp.t == INFINITY:
        alpha, beta = _infinity_coeffs(E)
    else:
        alpha, beta = _affine_coeffs(E, F(inp.t))
    d = F(inp.d)
    return alpha * d ** 2, beta * d ** 3


def section3_curve(inp: Param3Input) -> EllipticCurve:
    alpha, beta = section3_coeffs(inp)
    if not weierstrass_discriminant(alpha, beta):
        raise SingularCurveError(f"member at t = {inp.t}, d = {inp.d} is singular")
    return EllipticCurve(alpha, beta, inp.curve.field)


def _parameters(F: PrimeField):
    ts = [*F.elements(), INFINITY]
    ds = [F(d) for d in range(1, F.p)]
    return ts, ds


@dataclass
class CoverageReport:
    curve: EllipticCurve
    shape: Shape
    membership: bool
    produced: int
    class_size: int
    missing: list = dc_field(default_factory=list)
    extra: list = dc_field(default_factory=list)
    singular_parameters: int = 0

    @property
    def covers(self) -> bool:
        return not self.missing and not self.extra

    def as_record(self) -> dict:
        return {
            "curve": str(self.curve),
            "p": self.curve.field.p,
            "shape": self.shape.value,
            "membership": self.membership,
            "covers": self.covers,
            "produced": self.produced,
            "class_size": self.class_size,
            "missing": [list(k) for k in self.missing],
            "extra": [list(k) for k in self.extra],
            "singular_parameters": self.singular_parameters,
        }


def section3_coverage(E: EllipticCurve) -> CoverageReport:
    """Run every (t, d) over GF(p); compare classes and the produced set with the full class."""
    F = E.field
    if not isinstance(F, PrimeField):
        raise ValueError("coverage is computed over a prime field")
    target = class_over_fp(E)
    table = class_table(F.p)
    produced = set()
    singular = 0
    member = True
    ts, ds = _parameters(F)
    for t in ts:
        for d in ds:
            alpha, beta = section3_coeffs(Param3Input(E, t, d))
            key = (alpha.value, beta.value)
            if key not in table:
                singular += 1
                continue
            produced.add(key)
            if table[key] is not target:
                member = False
    full = class_set_fp(E)
    return CoverageReport(
        curve=E,
        shape=shape_of(E),
        membership=member,
        produced=len(produced),
        class_size=len(full),
        missing=sorted(full - produced),
        extra=sorted(produced - full),
        singular_parameters=singular,
    )


def section3_membership_check(E: EllipticCurve) -> bool:
    return section3_coverage(E).membership
