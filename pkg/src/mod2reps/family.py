"""The two-parameter family E_{u,v} of curves with the same 2-torsion module as E.

For a base curve E: y^2 = f(x) = x^3 + a x + b, the member E_{u,v} is the
curve whose 2-division cubic is the characteristic polynomial of
multiplication by 3u x^2 + 3v x + 2a u on F[x]/(f).  Written out,

    alpha = 3(3a v^2 + 9b u v - a^2 u^2)
    beta  = 27b v^3 - 18a^2 u v^2 - 27a b u^2 v - (2a^3 + 27b^2) u^3

and Delta(E_{u,v}) = 3^6 (v^3 + a u^2 v + b u^3)^2 Delta(E).
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import field_inverse, render
from .curve import EllipticCurve, SingularCurveError, discriminant, two_division_poly
from .poly import Polynomial, algebra_map_matrix, charpoly3, det3, mult_matrix


class UndefinedCError(ValueError):
    pass


class UnsupportedJInvariantError(ValueError):
    pass


@dataclass(frozen=True)
class UVPoint:
    """A point (u : v) of P^1."""

    u: object
    v: object

    def normalized(self) -> UVPoint:
        if self.v:
            return UVPoint(self.u * field_inverse(self.v), self.v * field_inverse(self.v))
        if self.u:
            return UVPoint(self.u * field_inverse(self.u), self.v)
        raise ValueError("(0 : 0) is not a point of P^1")

    def __str__(self):
        return f"({render(self.u)} : {render(self.v)})"


def projective_line(F):
    """Normalized points of P^1(GF(p)) in lexicographic order: (0:1) .. (p-1:1), then (1:0)."""
    pts = [UVPoint(F(u), F.one) for u in range(F.p)]
    pts.append(UVPoint(F.one, F.zero))
    return pts


@dataclass(frozen=True)
class FamilyContext:
    """A base curve E whose family E_{u,v} is being studied."""

    curve: EllipticCurve

    @property
    def a(self):
        return self.curve.a

    @property
    def b(self):
        return self.curve.b

    @property
    def field(self):
        return self.curve.field

    def phi_image(self, u, v) -> Polynomial:
        """3u x^2 + 3v x + 2a u, the image of z under the algebra map."""
        F = self.field
        return Polynomial([2 * self.a * F(u), 3 * F(v), 3 * F(u)], F)


def singularity_locus(ctx: FamilyContext, u, v):
    """v^3 + a u^2 v + b u^3; E_{u,v} is nonsingular iff this is nonzero."""
    F = ctx.field
    u, v = F(u), F(v)
    return v ** 3 + ctx.a * u ** 2 * v + ctx.b * u ** 3


def x_coefficient_numerator(ctx: FamilyContext, u, v):
    """3a v^2 + 9b u v - a^2 u^2, so that alpha = 3 * this."""
    F = ctx.field
    u, v = F(u), F(v)
    a, b = ctx.a, ctx.b
    return 3 * a * v ** 2 + 9 * b * u * v - a ** 2 * u ** 2


def family_coeffs(ctx: FamilyContext, u, v, *, check: bool = True):
    """(alpha, beta) of E_{u,v}, from the closed form."""
    if check and not singularity_locus(ctx, u, v):
        raise SingularCurveError(f"E_{{u,v}} is singular at (u, v) = ({u}, {v})")
    F = ctx.field
    u, v = F(u), F(v)
    a, b = ctx.a, ctx.b
    alpha = 3 * x_coefficient_numerator(ctx, u, v)
    beta = (27 * b * v ** 3 - 18 * a ** 2 * u * v ** 2 - 27 * a * b * u ** 2 * v
            - (2 * a ** 3 + 27 * b ** 2) * u ** 3)
    return alpha, beta


def phi_charpoly(ctx: FamilyContext, u, v) -> Polynomial:
    """Characteristic polynomial of multiplication by phi_image on F[x]/(f)."""
    return charpoly3(mult_matrix(ctx.phi_image(u, v), two_division_poly(ctx.curve)))


def family_curve(ctx: FamilyContext, u, v) -> EllipticCurve:
    alpha, beta = family_coeffs(ctx, u, v)
    return EllipticCurve(alpha, beta, ctx.field)


def family_disc_check(ctx: FamilyContext, u, v) -> bool:
    member = family_curve(ctx, u, v)
    locus = singularity_locus(ctx, u, v)
    return discriminant(member) == 3 ** 6 * locus ** 2 * discriminant(ctx.curve)


def phi_det(ctx: FamilyContext, u, v):
    """Determinant of z -> 3u x^2 + 3v x + 2a u in the bases {1, z, z^2}, {1, x, x^2}."""
    return det3(algebra_map_matrix(ctx.phi_image(u, v), two_division_poly(ctx.curve)))


def _c_times_a_cubed(ctx: FamilyContext, point: UVPoint):
    """C(u, v) * a^3, which stays defined when a = 0."""
    locus = singularity_locus(ctx, point.u, point.v)
    if not locus:
        raise SingularCurveError(f"E_{{u,v}} is singular at {point}")
    num = x_coefficient_numerator(ctx, point.u, point.v)
    return num ** 3 * field_inverse(27 * locus ** 2)


def cor2_C(ctx: FamilyContext, point: UVPoint):
    """C(u, v) = (3a v^2 + 9b u v - a^2 u^2)^3 / (27 a^3 (v^3 + a u^2 v + b u^3)^2)."""
    if not ctx.a:
        raise UndefinedCError("C(u, v) is undefined when a = 0")
    return _c_times_a_cubed(ctx, point) * field_inverse(ctx.a ** 3)


def verify_witness(E: EllipticCurve, E2: EllipticCurve, point: UVPoint) -> bool:
    """Check the j-invariant criteria linking E2 to the member of E's family at `point`.

    Criterion (i), j(E2)/j(E) = C(u, v), is tested when a != 0; criterion
    (ii), j(E2)/(j(E) - 1728) = -4 C(u, v) a^3 / (27 b^2), when b != 0.
    """
    if E2.j == 0 or E2.j == 1728:
        raise UnsupportedJInvariantError("criteria only apply when j(E') is not 0 or 1728")
    return all(criteria_values(E, E2, point).values())


def criteria_values(E: EllipticCurve, E2: EllipticCurve, point: UVPoint) -> dict:
    """Which of the two criteria apply at `point` and whether each holds."""
    ctx = FamilyContext(E)
    ca3 = _c_times_a_cubed(ctx, point)
    out = {}
    if E.a:
        out["i"] = E2.j * field_inverse(E.j) == ca3 * field_inverse(E.a ** 3)
    if E.b:
        out["ii"] = E2.j * field_inverse(E.j - 1728) == -4 * ca3 * field_inverse(27 * E.b ** 2)
    return out
