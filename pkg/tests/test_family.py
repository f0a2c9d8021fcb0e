import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from mod2reps.arith import PrimeField, is_square
from mod2reps.curve import (
    EllipticCurve,
    SingularCurveError,
    all_curves,
    is_isomorphic,
    quadratic_twist,
)
from mod2reps.family import (
    FamilyContext,
    UndefinedCError,
    UnsupportedJInvariantError,
    UVPoint,
    cor2_C,
    criteria_values,
    family_coeffs,
    family_curve,
    family_disc_check,
    phi_charpoly,
    phi_det,
    projective_line,
    singularity_locus,
    verify_witness,
)
from mod2reps.poly import Polynomial, rational_roots

BIG = PrimeField((1 << 61) - 1)


class _raw_curve:
    """Bare (a, b) pair for identities that hold for singular bases too."""

    def __init__(self, a, b, F):
        self.a, self.b, self.field = F(a), F(b), F


def ctx_q(a, b):
    return FamilyContext(EllipticCurve(Fraction(a), Fraction(b)))


def test_closed_form_matches_symbolic_charpoly():
    # Independent route: sympy's own charpoly of the multiplication matrix.
    a, b, u, v, x, T = sympy.symbols("a b u v x T")
    f = sympy.Poly(x ** 3 + a * x + b, x)
    h = 3 * u * x ** 2 + 3 * v * x + 2 * a * u
    cols = []
    for i in range(3):
        r = sympy.Poly(sympy.rem(sympy.Poly(h * x ** i, x), f), x)
        cols.append([r.coeff_monomial(x ** k) for k in range(3)])
    cp = sympy.expand(sympy.Matrix(cols).T.charpoly(T).as_expr())
    alpha = 3 * (3 * a * v ** 2 + 9 * b * u * v - a ** 2 * u ** 2)
    beta = 27 * b * v ** 3 - 18 * a ** 2 * u * v ** 2 - 27 * a * b * u ** 2 * v - (2 * a ** 3 + 27 * b ** 2) * u ** 3
    assert sympy.expand(cp - (T ** 3 + alpha * T + beta)) == 0


def test_singularity_locus_examples():
    ctx = ctx_q(2, 3)
    assert singularity_locus(ctx, 0, 1) == 1
    assert singularity_locus(ctx, 0, 0) == 0
    for u in (1, 2, -3):
        for v in range(-4, 5):
            f_at = Fraction(v, u) ** 3 + 2 * Fraction(v, u) + 3
            assert singularity_locus(ctx, u, v) == u ** 3 * f_at


def test_family_coeffs_examples():
    a, b = Fraction(5), Fraction(-2)
    ctx = ctx_q(a, b)
    assert family_coeffs(ctx, 0, 1) == (9 * a, 27 * b)
    assert family_coeffs(ctx, 1, 0) == (-3 * a ** 2, -(2 * a ** 3 + 27 * b ** 2))
    assert family_coeffs(ctx_q(-7, 6), 1, 0) == (-147, -286)
    with pytest.raises(SingularCurveError):
        family_coeffs(ctx_q(-1, 0), 1, 1)  # locus = 1 - 1 + 0


def test_regression_vectors_over_q():
    f = Polynomial
    alpha, beta = family_coeffs(ctx_q(-7, 6), 1, 0)
    assert rational_roots(f([beta, alpha, 0, 1])) == [-11, -2, 13]
    assert sorted(3 * r * r - 14 for r in (1, 2, -3)) == [-11, -2, 13]
    member = family_curve(ctx_q(-1, 0), 1, 2)
    assert member == EllipticCurve(-39, -70)
    assert rational_roots(f([-70, -39, 0, 1])) == [-5, -2, 7]


def test_printed_variants_disagree_with_charpoly():
    # The x-coefficient's middle term must be 9buv; 9bu^2 and 9buw (w = 2au) both fail here.
    ctx = ctx_q(-7, 6)
    a, b, u, v = -7, 6, 1, 0
    alpha = phi_charpoly(ctx, u, v).coeff(1)
    assert alpha == 3 * (3 * a * v ** 2 + 9 * b * u * v - a ** 2 * u ** 2) == -147
    assert alpha != 3 * (3 * a * v ** 2 + 9 * b * u ** 2 - a ** 2 * u ** 2)
    assert alpha != 3 * (3 * a * v ** 2 + 9 * b * u * (2 * a * u) - a ** 2 * u ** 2)


def test_member_at_0_1_is_twist_by_3():
    for p in (11, 13, 23):  # 3 is a square mod these primes
        F = PrimeField(p)
        assert is_square(F(3))
        for E in all_curves(F):
            ctx = FamilyContext(E)
            member = family_curve(ctx, 0, 1)
            assert member == quadratic_twist(E, 3)
            assert is_isomorphic(member, E)


@pytest.mark.parametrize("p", [5, 7])
def test_charpoly_oracle_exhaustive(p):
    F = PrimeField(p)
    for a in range(p):
        for b in range(p):
            ctx = FamilyContext(_raw_curve(a, b, F))
            for u in range(p):
                for v in range(p):
                    alpha, beta = family_coeffs(ctx, u, v, check=False)
                    assert phi_charpoly(ctx, u, v) == Polynomial([beta, alpha, 0, 1], F)


def test_root_image_identity():
    rng = random.Random(2)
    F = BIG
    T = Polynomial.x(F)
    for _ in range(200):
        r1, r2 = F(rng.randrange(F.p)), F(rng.randrange(F.p))
        r3 = -r1 - r2
        a = r1 * r2 + r1 * r3 + r2 * r3
        b = -r1 * r2 * r3
        u, v = F(rng.randrange(F.p)), F(rng.randrange(F.p))
        ctx = FamilyContext(_raw_curve(a, b, F))
        alpha, beta = family_coeffs(ctx, u, v, check=False)
        prod = Polynomial([1], F)
        for r in (r1, r2, r3):
            prod = prod * (T - (3 * u * r * r + 3 * v * r + 2 * a * u))
        assert prod == Polynomial([beta, alpha, 0, 1], F)


@settings(max_examples=200)
@given(*(st.integers(-20, 20) for _ in range(4)), st.integers(-9, 9).filter(bool))
def test_homogeneity_is_a_twist(a, b, u, v, lam):
    if 4 * a ** 3 + 27 * b ** 2 == 0:
        return
    ctx = ctx_q(a, b)
    if not singularity_locus(ctx, u, v):
        return
    assert family_curve(ctx, lam * u, lam * v) == quadratic_twist(family_curve(ctx, u, v), lam)


@pytest.mark.parametrize("p", [7])
def test_family_disc_check_exhaustive(p):
    F = PrimeField(p)
    E = EllipticCurve(F(1), F(1), F)
    ctx = FamilyContext(E)
    for u in range(p):
        for v in range(p):
            if singularity_locus(ctx, u, v):
                assert family_disc_check(ctx, u, v)


def test_family_disc_check_examples():
    ctx = ctx_q(2, 3)
    assert family_disc_check(ctx, 0, 1)
    assert family_disc_check(ctx, 1, 0)
    member = family_curve(ctx, 1, 0)
    assert member.discriminant == 3 ** 6 * 3 ** 2 * ctx.curve.discriminant


def test_phi_det_examples():
    ctx = ctx_q(2, 3)
    assert phi_det(ctx, 0, 1) == 27
    assert phi_det(ctx, 0, 0) == 0
    rng = random.Random(5)
    F = PrimeField(11)
    for E in all_curves(F):
        c = FamilyContext(E)
        u, v = rng.randrange(11), rng.randrange(11)
        assert phi_det(c, u, v) == 27 * singularity_locus(c, u, v)
        assert bool(phi_det(c, u, v)) == bool(singularity_locus(c, u, v))


def test_cor2_C_examples():
    a, b = Fraction(2), Fraction(3)
    ctx = ctx_q(a, b)
    assert cor2_C(ctx, UVPoint(Fraction(0), Fraction(1))) == 1
    c10 = cor2_C(ctx, UVPoint(Fraction(1), Fraction(0)))
    assert c10 == -a ** 3 / (27 * b ** 2)
    assert c10 == family_curve(ctx, 1, 0).j / ctx.curve.j
    for lam in (2, -3, Fraction(1, 5)):
        pt = UVPoint(Fraction(2), Fraction(7))
        scaled = UVPoint(lam * pt.u, lam * pt.v)
        assert cor2_C(ctx, scaled) == cor2_C(ctx, pt)
    with pytest.raises(UndefinedCError):
        cor2_C(ctx_q(0, 1), UVPoint(Fraction(0), Fraction(1)))


def test_verify_witness_examples():
    F = PrimeField(13)
    E = EllipticCurve(F(2), F(5), F)
    ctx = FamilyContext(E)
    for pt in projective_line(F):
        if not singularity_locus(ctx, pt.u, pt.v):
            continue
        member = family_curve(ctx, pt.u, pt.v)
        if member.j in (0, 1728):
            continue
        assert verify_witness(E, member, pt)
        crit = criteria_values(E, member, pt)
        assert crit == {"i": True, "ii": True}
    other = EllipticCurve(F(1), F(1), F)
    pt = UVPoint(F(0), F(1))
    assert other.j != E.j
    assert not verify_witness(E, other, pt)
    with pytest.raises(UnsupportedJInvariantError):
        verify_witness(E, EllipticCurve(F(1), F(0), F), pt)


def test_criteria_agree_over_q():
    rng = random.Random(11)
    for _ in range(200):
        a, b = rng.randint(-9, 9) or 1, rng.randint(-9, 9) or 1
        if 4 * a ** 3 + 27 * b ** 2 == 0:
            continue
        E = EllipticCurve(a, b)
        E2 = EllipticCurve(rng.randint(-9, 9) or 2, rng.randint(-9, 9) or 3)
        pt = UVPoint(Fraction(rng.randint(-5, 5)), Fraction(rng.randint(-5, 5)))
        if (pt.u == 0 and pt.v == 0) or not singularity_locus(FamilyContext(E), pt.u, pt.v):
            continue
        crit = criteria_values(E, E2, pt)
        assert crit["i"] == crit["ii"]


def test_projective_line_order_and_normalization():
    F = PrimeField(5)
    pts = projective_line(F)
    assert [(int(p.u), int(p.v)) for p in pts] == [(0, 1), (1, 1), (2, 1), (3, 1), (4, 1), (1, 0)]
    assert UVPoint(F(2), F(4)).normalized() == UVPoint(F(3), F(1))
    assert UVPoint(F(3), F(0)).normalized() == UVPoint(F(1), F(0))
    with pytest.raises(ValueError):
        UVPoint(F(0), F(0)).normalized()
