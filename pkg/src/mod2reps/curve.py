"""Short Weierstrass curves y^2 = x^3 + a x + b over Q or GF(p)."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import sympy

from .arith import (
    QQ,
    Field,
    PrimeField,
    field_inverse,
    is_prime,
    is_square,
    kth_power_exists,
    render,
)
from .poly import Polynomial


class SingularCurveError(ValueError):
    pass


class BadReductionError(ValueError):
    pass


class FieldMismatchError(ValueError):
    pass


def weierstrass_discriminant(a, b):
    """-16(4a^3 + 27b^2); defined for singular pairs too."""
    return -16 * (4 * a ** 3 + 27 * b ** 2)


@dataclass(frozen=True)
class EllipticCurve:
    a: object
    b: object
    field: Field = QQ

    def __post_init__(self):
        field = self.field
        object.__setattr__(self, "a", field(self.a))
        object.__setattr__(self, "b", field(self.b))
        if not weierstrass_discriminant(self.a, self.b):
            raise SingularCurveError(f"y^2 = x^3 + {render(self.a)}x + {render(self.b)} is singular over {field!r}")

    @classmethod
    def over(cls, a, b, p: int | None = None) -> EllipticCurve:
        return cls(a, b, QQ if p is None else PrimeField(p))

    @property
    def discriminant(self):
        return discriminant(self)

    @cached_property
    def j(self):
        return j_invariant(self)

    @property
    def coeffs(self) -> tuple:
        return self.a, self.b

    def key(self) -> tuple:
        """Hashable plain form: (a, b) as ints over GF(p), Fractions over Q."""
        if isinstance(self.field, PrimeField):
            return self.a.value, self.b.value
        return self.a, self.b

    def __str__(self):
        return f"{render(self.a)},{render(self.b)}"


def discriminant(E: EllipticCurve):
    return weierstrass_discriminant(E.a, E.b)


def j_invariant(E: EllipticCurve):
    """6912 a^3 / (4a^3 + 27b^2)."""
    a3 = E.a ** 3
    return 6912 * a3 * field_inverse(4 * a3 + 27 * E.b ** 2)


def quadratic_twist(E: EllipticCurve, d) -> EllipticCurve:
    d = E.field(d)
    if not d:
        raise ValueError("twist parameter must be nonzero")
    return EllipticCurve(E.a * d ** 2, E.b * d ** 3, E.field)


def _check_same_field(E: EllipticCurve, E2: EllipticCurve):
    if E.field != E2.field:
        raise FieldMismatchError(f"curves over {E.field!r} and {E2.field!r}")


def is_isomorphic(E: EllipticCurve, E2: EllipticCurve) -> bool:
    """Whether a' = u^4 a and b' = u^6 b for some nonzero u in the base field."""
    _check_same_field(E, E2)
    if E.j != E2.j:
        return False
    if not E.b:  # j = 1728
        return kth_power_exists(E2.a / E.a, 4)
    if not E.a:  # j = 0
        return kth_power_exists(E2.b / E.b, 6)
    s = E.a * E2.b / (E2.a * E.b)
    return E2.a == s ** 2 * E.a and E2.b == s ** 3 * E.b and is_square(s)


def two_division_poly(E: EllipticCurve) -> Polynomial:
    return Polynomial([E.b, E.a, 0, 1], E.field)


def _clearing_factor(den: int, power: int) -> int:
    """Least c > 0 with den | c**power."""
    c = 1
    for q, e in sympy.factorint(den).items():
        c *= q ** -(-e // power)
    return c


def integral_model(E: EllipticCurve) -> EllipticCurve:
    """(a c^4, b c^6) for the least c > 0 making both coefficients integers."""
    if E.field is not QQ:
        raise ValueError("integral_model needs a curve over Q")
    c = math.lcm(_clearing_factor(E.a.denominator, 4), _clearing_factor(E.b.denominator, 6))
    if c == 1:
        return E
    return EllipticCurve(E.a * c ** 4, E.b * c ** 6)


def reduce_mod_p(E: EllipticCurve, p: int) -> EllipticCurve:
    if p <= 3:
        raise BadReductionError(f"p = {p} is excluded (characteristic 2 or 3)")
    model = integral_model(E)
    if int(discriminant(model)) % p == 0:
        raise BadReductionError(f"{p} divides the discriminant of {model}")
    F = PrimeField(p)
    return EllipticCurve(F(int(model.a)), F(int(model.b)), F)


def good_primes(E: EllipticCurve, count: int) -> list[int]:
    """First `count` primes p > 3 not dividing the integral model's discriminant."""
    disc = int(discriminant(integral_model(E)))
    out = []
    p = 5
    while len(out) < count:
        if is_prime(p) and disc % p:
            out.append(p)
        p += 2
    return out


def parse_curve(text: str, p: int | None = None) -> EllipticCurve:
    """Parse the "a,b" curve text format."""
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"expected 'a,b', got {text!r}")
    field = QQ if p is None else PrimeField(p)
    return EllipticCurve(field(parts[0]), field(parts[1]), field)


def all_curves(F: PrimeField):
    """Every nonsingular (a, b) over GF(p), lexicographic."""
    p = F.p
    for a in range(p):
        for b in range(p):
            if (4 * a ** 3 + 27 * b ** 2) % p:
                yield EllipticCurve(F(a), F(b), F)
