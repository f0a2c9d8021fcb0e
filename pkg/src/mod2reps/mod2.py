"""Deciding E[2] = E'[2] as Galois modules.

Two curves have isomorphic 2-torsion exactly when the cubic algebras
F[x]/(f) and F[x]/(g) of their 2-division cubics are isomorphic.  Over
GF(p) that is a comparison of factorization types.  Over Q the split and
partially split cases are decided exactly; the irreducible case falls
back to comparing Frobenius types at good primes.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .arith import QQ, PrimeField, is_prime
from .curve import (
    EllipticCurve,
    FieldMismatchError,
    discriminant,
    integral_model,
    reduce_mod_p,
    two_division_poly,
)
from .family import (
    FamilyContext,
    UnsupportedJInvariantError,
    UVPoint,
    family_coeffs,
    projective_line,
    singularity_locus,
    verify_witness,
)
from .poly import Mod2Class, Polynomial, degree_multiset, rational_roots

DEFAULT_PRIME_BUDGET = 25
# Cap on the search for a Frobenius witness separating two quadratic fields.
_WITNESS_SEARCH_LIMIT = 2000


class Verdict(enum.Enum):
    ISO = "ISO"
    NOT_ISO = "NOT_ISO"
    PROBABLY_ISO = "PROBABLY_ISO"


@dataclass(frozen=True)
class IsoVerdict:
    kind: Verdict
    reason: str = ""
    prime: int | None = None
    primes_checked: int = 0

    @property
    def is_not_isomorphic(self) -> bool:
        return self.kind is Verdict.NOT_ISO

    def __str__(self):
        if self.kind is Verdict.ISO:
            return "ISO"
        if self.kind is Verdict.PROBABLY_ISO:
            return f"PROBABLY_ISO n={self.primes_checked}"
        if self.prime is not None:
            return f"NOT_ISO p={self.prime}"
        return "NOT_ISO pattern"


@lru_cache(maxsize=None)
def class_table(p: int) -> dict[tuple[int, int], Mod2Class]:
    """Mod-2 class of every nonsingular x^3 + alpha x + beta over GF(p)."""
    F = PrimeField(p)
    table = {}
    for alpha in range(p):
        for beta in range(p):
            if (4 * alpha ** 3 + 27 * beta ** 2) % p:
                table[alpha, beta] = degree_multiset(Polynomial([beta, alpha, 0, 1], F))
    return table


def _require_fp(E: EllipticCurve) -> PrimeField:
    if not isinstance(E.field, PrimeField):
        raise ValueError("expected a curve over a prime field")
    return E.field


def class_over_fp(E: EllipticCurve) -> Mod2Class:
    _require_fp(E)
    return degree_multiset(two_division_poly(E))


def iso_fp(E: EllipticCurve, E2: EllipticCurve) -> bool:
    if _require_fp(E) != _require_fp(E2):
        raise FieldMismatchError(f"moduli {E.field.p} and {E2.field.p} differ")
    return class_over_fp(E) == class_over_fp(E2)


def _require_q(E: EllipticCurve):
    if E.field is not QQ:
        raise ValueError("expected a curve over Q")


def rational_pattern(E: EllipticCurve) -> Mod2Class:
    _require_q(E)
    n = len(rational_roots(two_division_poly(E)))
    return {3: Mod2Class.SPLIT, 1: Mod2Class.PARTIAL, 0: Mod2Class.IRREDUCIBLE}[n]


def quadratic_discriminant(E: EllipticCurve) -> Fraction:
    """Discriminant of the quadratic factor when the cubic has exactly one rational root."""
    _require_q(E)
    roots = rational_roots(two_division_poly(E))
    if len(roots) != 1:
        raise ValueError("2-division cubic does not have exactly one rational root")
    r = roots[0]
    # x^3 + a x + b = (x - r)(x^2 + r x + a + r^2)
    return -3 * r * r - 4 * E.a


def _is_rational_square(q: Fraction) -> bool:
    return q >= 0 and math.isqrt(q.numerator) ** 2 == q.numerator and math.isqrt(q.denominator) ** 2 == q.denominator


def shared_good_primes(curves, count: int | None = None, limit: int | None = None):
    """Ascending primes p > 3 of good reduction for every curve in `curves`."""
    discs = [int(discriminant(integral_model(E))) for E in curves]
    p = 5
    found = 0
    while (count is None or found < count) and (limit is None or p <= limit):
        if is_prime(p) and all(d % p for d in discs):
            yield p
            found += 1
        p += 2


def _first_frobenius_mismatch(E: EllipticCurve, E2: EllipticCurve, count: int):
    checked = 0
    for p in shared_good_primes([E, E2], count):
        checked += 1
        if class_over_fp(reduce_mod_p(E, p)) != class_over_fp(reduce_mod_p(E2, p)):
            return p, checked
    return None, checked


def iso_q(E: EllipticCurve, E2: EllipticCurve, prime_budget: int = DEFAULT_PRIME_BUDGET) -> IsoVerdict:
    """Decide whether E[2] and E2[2] are isomorphic over Q.

    A differing rational factorization pattern or a differing Frobenius
    type at a good prime proves non-isomorphism.  Split cubics always
    match; partially split ones match iff their quadratic factors cut out
    the same field.  Irreducible cubics that agree at `prime_budget`
    shared good primes get PROBABLY_ISO.
    """
    _require_q(E)
    _require_q(E2)
    pat, pat2 = rational_pattern(E), rational_pattern(E2)
    if pat != pat2:
        return IsoVerdict(Verdict.NOT_ISO, reason=f"pattern {pat} vs {pat2}")
    if pat is Mod2Class.SPLIT:
        return IsoVerdict(Verdict.ISO, reason="both split")
    if pat is Mod2Class.PARTIAL:
        d, d2 = quadratic_discriminant(E), quadratic_discriminant(E2)
        if _is_rational_square(d * d2):
            return IsoVerdict(Verdict.ISO, reason="same quadratic field")
        p, _ = _first_frobenius_mismatch(E, E2, _WITNESS_SEARCH_LIMIT)
        return IsoVerdict(Verdict.NOT_ISO, reason="different quadratic fields", prime=p)
    p, checked = _first_frobenius_mismatch(E, E2, prime_budget)
    if p is not None:
        return IsoVerdict(Verdict.NOT_ISO, reason="Frobenius mismatch", prime=p, primes_checked=checked)
    return IsoVerdict(Verdict.PROBABLY_ISO, reason="Frobenius types agree", primes_checked=checked)


def find_witness_fp(E: EllipticCurve, E2: EllipticCurve) -> UVPoint | None:
    """First normalized (u : v) in P^1(GF(p)) satisfying the j-invariant criteria, if any."""
    F = _require_fp(E)
    if _require_fp(E2) != F:
        raise FieldMismatchError(f"moduli {F.p} and {E2.field.p} differ")
    if E2.j == 0 or E2.j == 1728:
        raise UnsupportedJInvariantError("witness search needs j(E') not in {0, 1728}")
    ctx = FamilyContext(E)
    for point in projective_line(F):
        if singularity_locus(ctx, point.u, point.v) and verify_witness(E, E2, point):
            return point
    return None


def class_set_fp(E: EllipticCurve) -> frozenset[tuple[int, int]]:
    """All nonsingular (alpha, beta) over GF(p) in the same mod-2 class as E."""
    F = _require_fp(E)
    target = class_over_fp(E)
    return frozenset(k for k, cls in class_table(F.p).items() if cls is target)


def family_image_fp(E: EllipticCurve) -> frozenset[tuple[int, int]]:
    """All (alpha, beta) of nonsingular members E_{u,v}, (u, v) ranging over GF(p)^2."""
    F = _require_fp(E)
    ctx = FamilyContext(E)
    out = set()
    for u in F.elements():
        for v in F.elements():
            if singularity_locus(ctx, u, v):
                alpha, beta = family_coeffs(ctx, u, v, check=False)
                out.add((alpha.value, beta.value))
    return frozenset(out)
