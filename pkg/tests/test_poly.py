import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from mod2reps.arith import QQ, PrimeField
from mod2reps.poly import (
    Matrix3,
    Mod2Class,
    Polynomial,
    charpoly3,
    degree_multiset,
    det3,
    is_separable,
    mult_matrix,
    poly_divmod,
    poly_gcd,
    powmod_x_to_p,
    rational_roots,
)

F5, F7 = PrimeField(5), PrimeField(7)
BIG = PrimeField((1 << 61) - 1)


def P(coeffs, field=QQ):
    return Polynomial(coeffs, field)


def test_zero_polynomial_is_empty():
    assert P([0, 0]).coeffs == ()
    assert P([]).degree == -1
    assert P([1, 2, 0]).degree == 1


def test_divmod_examples():
    q, r = poly_divmod(P([1, 1, 0, 1], F5), P([-1, 1], F5))
    assert q == P([2, 1, 1], F5)
    assert r == P([3], F5)
    # remainder theorem: f(1) = 3
    assert P([1, 1, 0, 1], F5)(F5(1)) == 3
    assert poly_divmod(P([0, 0, 0, 1]), P([0, 0, 0, 1])) == (P([1]), P([]))
    with pytest.raises(ZeroDivisionError):
        poly_divmod(P([1, 2]), P([]))


@given(
    st.lists(st.integers(0, 100), max_size=8),
    st.lists(st.integers(0, 100), min_size=1, max_size=5).filter(lambda c: c[-1] % 101),
)
def test_divmod_reconstructs(fc, gc):
    F = PrimeField(101)
    f, g = P(fc, F), P(gc, F)
    q, r = poly_divmod(f, g)
    assert q * g + r == f
    assert r.degree < g.degree


def test_gcd_examples():
    f = P([0, -1, 0, 1], F5)
    assert poly_gcd(f, P([-1, 0, 1], F5)) == P([-1, 0, 1], F5)
    g = P([2, 0, 3], F5)
    assert poly_gcd(g, P([], F5)) == g.monic()
    assert poly_gcd(P([4], F5), f) == P([1], F5)
    with pytest.raises(ValueError):
        poly_gcd(P([], F5), P([], F5))


def test_powmod_x_to_p_examples():
    assert powmod_x_to_p(P([0, -1, 0, 1], F5)) == P([0, 1], F5)
    assert powmod_x_to_p(P([0, 0, 1], F5)) == P([], F5)
    assert powmod_x_to_p(P([-1, 1], F7)) == P([1], F7)
    with pytest.raises(ValueError):
        powmod_x_to_p(P([3], F7))


def test_degree_multiset_examples():
    assert degree_multiset(P([0, -1, 0, 1], F5)) is Mod2Class.SPLIT
    assert degree_multiset(P([1, 1, 0, 1], F5)) is Mod2Class.IRREDUCIBLE
    assert degree_multiset(P([0, 1, 0, 1], F7)) is Mod2Class.PARTIAL
    with pytest.raises(ValueError):
        degree_multiset(P([0, 0, 1], F5))
    with pytest.raises(ValueError):
        degree_multiset(P([0, 0, 0, 1], F5))  # x^3 is not separable


def _brute_type(coeffs, p):
    """Factorization type by root search plus an irreducibility check of the cofactor."""
    c0, c1, c2, c3 = coeffs
    roots = [r for r in range(p) if (c0 + c1 * r + c2 * r * r + c3 * r ** 3) % p == 0]
    if not roots:
        return (3,)
    if len(roots) == 3:
        return (1, 1, 1)
    # one root r; divide out (x - r) and check the quadratic has no roots
    r = roots[0]
    inv = pow(c3, -1, p)
    b2 = c2 * inv % p
    q1 = (b2 + r) % p
    q0 = (c1 * inv + r * q1) % p
    assert all((x * x + q1 * x + q0) % p for x in range(p))
    return (1, 2)


@pytest.mark.parametrize("p", [5, 7, 11])
def test_degree_multiset_matches_brute_force(p):
    F = PrimeField(p)
    for c0, c1, c2 in itertools.product(range(p), repeat=3):
        f = P([c0, c1, c2, 1], F)
        if not is_separable(f):
            continue
        cls = degree_multiset(f)
        assert cls.degrees == _brute_type((c0, c1, c2, 1), p)
        assert sum(cls.degrees) == 3


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_gcd_with_frobenius_never_degree_two(p):
    F = PrimeField(p)
    x = Polynomial.x(F)
    for c0, c1, c2 in itertools.product(range(p), repeat=3):
        f = P([c0, c1, c2, 1], F)
        if is_separable(f):
            assert poly_gcd(powmod_x_to_p(f) - x, f).degree in (0, 1, 3)


def test_mult_matrix_examples():
    a, b = Fraction(2), Fraction(5)
    f = P([b, a, 0, 1])
    M = mult_matrix(P([0, 1]), f)
    assert M == Matrix3((0, 0, -b, 1, 0, -a, 0, 1, 0))
    assert mult_matrix(P([7]), f) == Matrix3((7, 0, 0, 0, 7, 0, 0, 0, 7))
    # h = 3x^2 + 2a; reduce h*x^i mod f by hand:
    #   h       = 2a + 3x^2
    #   h*x     = 3x^3 + 2a x = -3b - a x
    #   h*x^2   = 3x^4 + 2a x^2 = -3b x - a x^2
    M = mult_matrix(P([2 * a, 0, 3]), f)
    cols = [(2 * a, 0, 3), (-3 * b, -a, 0), (0, -3 * b, -a)]
    assert M == Matrix3.from_columns(cols)
    with pytest.raises(ValueError):
        mult_matrix(P([1]), P([1, 0, 0, 2]))
    with pytest.raises(ValueError):
        mult_matrix(P([0, 0, 0, 1]), f)


def test_charpoly_examples():
    T = P([0, 1])
    one = Matrix3((1, 0, 0, 0, 1, 0, 0, 0, 1))
    assert charpoly3(one) == (T - 1) ** 3
    assert charpoly3(Matrix3((1, 0, 0, 0, 2, 0, 0, 0, 3))) == (T - 1) * (T - 2) * (T - 3)
    a, b = Fraction(-7), Fraction(6)
    f = P([b, a, 0, 1])
    assert charpoly3(mult_matrix(P([0, 1]), f)) == f


def test_charpoly_of_companion_exhaustive_f5():
    x = Polynomial.x(F5)
    for c in itertools.product(range(5), repeat=3):
        f = P([*c, 1], F5)
        assert charpoly3(mult_matrix(x, f)) == f


def test_det_examples():
    assert det3(Matrix3((1, 0, 0, 0, 1, 0, 0, 0, 1))) == 1
    assert det3(Matrix3((1, 2, 3, 1, 2, 3, 4, 5, 6))) == 0
    assert det3(Matrix3((2, 0, 0, 0, 3, 0, 0, 0, 5))) == 30


@settings(max_examples=300)
@given(*(st.integers(0, BIG.p - 1) for _ in range(4)))
def test_trace_of_phi_image_vanishes(a, b, u, v):
    F = BIG
    f = P([b, a, 0, 1], F)
    h = P([2 * a * u, 3 * v, 3 * u], F)
    assert mult_matrix(h, f).trace() == 0


rational_root = st.builds(Fraction, st.integers(-50, 50), st.integers(1, 20))


@given(st.lists(rational_root, min_size=1, max_size=3), st.sampled_from([-5, -2, -1, 1, 3, 4]))
def test_rational_roots_of_products(roots, lead):
    f = P([lead])
    for r in roots:
        f = f * P([-r, 1])
    assert rational_roots(f) == sorted(set(roots))


def test_rational_roots_examples():
    assert rational_roots(P([1, 0, 0, 1])) == [-1]
    assert rational_roots(P([-2, 0, 0, 1])) == []
    assert rational_roots(P([0, -1, 0, 1])) == [-1, 0, 1]
    assert rational_roots(P([6, -7, 0, 1])) == [-3, 1, 2]
    assert rational_roots(P([Fraction(-1, 4), 0, 1])) == [Fraction(-1, 2), Fraction(1, 2)]


def test_rational_roots_random_cubics_against_divisor_search():
    rng = random.Random(7)
    for _ in range(300):
        c0 = rng.randint(-60, 60)
        c1 = rng.randint(-60, 60)
        c2 = rng.randint(-60, 60)
        f = P([c0, c1, c2, 1])
        if c0 == 0:
            cands = {0} | {d for d in range(-200, 201) if d and f(d) == 0}
        else:
            divs = [d for d in range(1, abs(c0) + 1) if c0 % d == 0]
            cands = {s * d for d in divs for s in (1, -1)}
        expected = sorted(r for r in cands if f(r) == 0)
        assert rational_roots(f) == expected


def test_polynomial_rendering():
    assert str(P([1, 0, -3, 1])) == "1 + -3*x^2 + 1*x^3"
    assert str(P([])) == "0"
    assert str(P([Fraction(1, 2), 2], F5)) == "3 + 2*x"
