"""Dense univariate polynomials over Q or GF(p), and 3x3 matrix helpers.

Only what the 2-torsion machinery needs: Euclidean division and gcd,
x^p mod f, the factorization type of a separable cubic over GF(p),
rational roots of cubics over Q, and multiplication matrices on
F[x]/(f) with their characteristic polynomial and determinant.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .arith import QQ, Field, Fp, PrimeField, field_inverse, render


class Mod2Class(enum.Enum):
    """Degrees of the irreducible factors of a separable cubic, sorted."""

    SPLIT = (1, 1, 1)
    PARTIAL = (1, 2)
    IRREDUCIBLE = (3,)

    @property
    def degrees(self) -> tuple[int, ...]:
        return self.value

    @classmethod
    def from_degrees(cls, degrees) -> Mod2Class:
        return cls(tuple(sorted(degrees)))

    def __str__(self):
        return "{" + ",".join(map(str, self.value)) + "}"


class Polynomial:
    """Immutable polynomial, coefficients constant term first.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs: Sequence, field: Field = QQ):
        cs = [field(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)
        self.field = field

    @classmethod
    def x(cls, field: Field = QQ) -> Polynomial:
        return cls([0, 1], field)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lc(self):
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def coeff(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.field.zero

    def monic(self) -> Polynomial:
        if self.is_zero():
            return self
        inv = field_inverse(self.lc())
        return Polynomial([c * inv for c in self.coeffs], self.field)

    def derivative(self) -> Polynomial:
        return Polynomial([i * c for i, c in enumerate(self.coeffs)][1:], self.field)

    def __call__(self, x):
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def _lift(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if other.field != self.field:
                raise ValueError(f"polynomials over {self.field} and {other.field} do not mix")
            return other
        return Polynomial([other], self.field)

    def __add__(self, other):
        other = self._lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial([self.coeff(i) + other.coeff(i) for i in range(n)], self.field)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs], self.field)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        if self.is_zero() or other.is_zero():
            return Polynomial([], self.field)
        out = [self.field.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, c in enumerate(self.coeffs):
            for j, d in enumerate(other.coeffs):
                out[i + j] = out[i + j] + c * d
        return Polynomial(out, self.field)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result = Polynomial([1], self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other):
        return poly_divmod(self, self._lift(other))

    def __mod__(self, other):
        return poly_divmod(self, self._lift(other))[1]

    def __floordiv__(self, other):
        return poly_divmod(self, self._lift(other))[0]

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, Fp)):
            return self == self._lift(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Polynomial({self}, {self.field!r})"

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                terms.append(render(c))
            elif i == 1:
                terms.append(f"{render(c)}*x")
            else:
                terms.append(f"{render(c)}*x^{i}")
        return " + ".join(terms) if terms else "0"


def poly_divmod(f: Polynomial, g: Polynomial) -> tuple[Polynomial, Polynomial]:
    if g.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    field = f.field
    rem = list(f.coeffs)
    dg = g.degree
    inv = field_inverse(g.lc())
    quot = [field.zero] * max(len(rem) - dg, 0)
    for k in range(len(rem) - 1, dg - 1, -1):
        c = rem[k] * inv
        if not c:
            continue
        quot[k - dg] = c
        for j, d in enumerate(g.coeffs):
            rem[k - dg + j] = rem[k - dg + j] - c * d
    return Polynomial(quot, field), Polynomial(rem[:dg], field)


def poly_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic gcd."""
    if f.is_zero() and g.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    while not g.is_zero():
        f, g = g, f % g
    return f.monic()


def powmod(base: Polynomial, e: int, modulus: Polynomial) -> Polynomial:
    result = Polynomial([1], modulus.field) % modulus
    base = base % modulus
    while e:
        if e & 1:
            result = (result * base) % modulus
        base = (base * base) % modulus
        e >>= 1
    return result


def powmod_x_to_p(f: Polynomial) -> Polynomial:
    """x^p mod f over GF(p)."""
    if not isinstance(f.field, PrimeField):
        raise ValueError("powmod_x_to_p needs a prime field")
    if f.degree < 1:
        raise ValueError("modulus must have positive degree")
    return powmod(Polynomial.x(f.field), f.field.p, f)


def is_separable(f: Polynomial) -> bool:
    return poly_gcd(f, f.derivative()).degree == 0


def degree_multiset(f: Polynomial) -> Mod2Class:
    """Factorization type of a separable cubic over GF(p).

    The number of roots in GF(p) is deg gcd(x^p - x, f), which for a
    separable cubic is 3, 1 or 0.
    """
    if f.degree != 3:
        raise ValueError(f"expected a cubic, got degree {f.degree}")
    if not is_separable(f):
        raise ValueError(f"{f} is not separable")
    f = f.monic()
    d = poly_gcd(powmod_x_to_p(f) - Polynomial.x(f.field), f).degree
    return {3: Mod2Class.SPLIT, 1: Mod2Class.PARTIAL, 0: Mod2Class.IRREDUCIBLE}[d]


def _monotone_integer_root(g, lo: int, hi: int):
    """Integer root of g in [lo, hi] where g is monotone there, or None."""
    if lo > hi:
        return None
    glo, ghi = g(lo), g(hi)
    if glo == 0:
        return lo
    if ghi == 0:
        return hi
    if (glo > 0) == (ghi > 0):
        return None
    rising = ghi > 0
    while hi - lo > 1:
        mid = (lo + hi) // 2
        gm = g(mid)
        if gm == 0:
            return mid
        if (gm > 0) == rising:
            hi = mid
        else:
            lo = mid
    return None


def _integer_roots_monic_cubic(c: Sequence[int]) -> list[int]:
    """Integer roots of y^3 + c2 y^2 + c1 y + c0, found by bisection on monotone pieces."""
    c0, c1, c2 = c

    def g(y):
        return ((y + c2) * y + c1) * y + c0

    bound = 1 + max(abs(c0), abs(c1), abs(c2))
    disc = 4 * c2 * c2 - 12 * c1
    found = set()
    if disc <= 0:
        pieces = [(-bound, bound)]
    else:
        # Critical points lie in [(-2c2 - s - 1)/6, (-2c2 + s + 1)/6] with s = isqrt(disc).
        s = math.isqrt(disc)
        left_end = (-2 * c2 - s - 1) // 6
        mid_start = -((2 * c2 + s) // 6)
        mid_end = (-2 * c2 + s) // 6
        right_start = -((2 * c2 - s - 1) // 6)
        pieces = [(-bound, left_end), (mid_start, mid_end), (right_start, bound)]
        gaps = [*range(left_end + 1, mid_start), *range(mid_end + 1, right_start)]
        found.update(y for y in gaps if g(y) == 0)
    for lo, hi in pieces:
        r = _monotone_integer_root(g, lo, hi)
        if r is not None:
            found.add(r)
    return sorted(found)


def rational_roots(f: Polynomial) -> list[Fraction]:
    """Distinct rational roots of a nonzero polynomial over Q of degree <= 3."""
    if f.field is not QQ:
        raise ValueError("rational_roots needs a polynomial over Q")
    if f.is_zero():
        raise ValueError("the zero polynomial has every root")
    n = f.degree
    if n > 3:
        raise NotImplementedError("rational roots only for degree <= 3")
    if n == 0:
        return []
    # Clear denominators, then y = lead * x turns f into a monic integer polynomial.
    den = math.lcm(*(c.denominator for c in f.coeffs))
    ints = [int(c * den) for c in f.coeffs]
    lead = ints[-1]
    monic = [ints[i] * lead ** (n - 1 - i) for i in range(n)]
    if n == 1:
        ys = [-monic[0]]
    elif n == 2:
        disc = monic[1] ** 2 - 4 * monic[0]
        if disc < 0 or math.isqrt(disc) ** 2 != disc:
            ys = []
        else:
            s = math.isqrt(disc)
            ys = sorted({(-monic[1] - s) // 2, (-monic[1] + s) // 2})
    else:
        ys = _integer_roots_monic_cubic(monic)
    return sorted({Fraction(y, lead) for y in ys})


@dataclass(frozen=True)
class Matrix3:
    """3x3 matrix, row-major entries."""

    entries: tuple

    def __post_init__(self):
        if len(self.entries) != 9:
            raise ValueError("Matrix3 needs 9 entries")

    @classmethod
    def from_columns(cls, cols) -> Matrix3:
        return cls(tuple(cols[c][r] for r in range(3) for c in range(3)))

    def __getitem__(self, rc):
        r, c = rc
        return self.entries[3 * r + c]

    def trace(self):
        return self[0, 0] + self[1, 1] + self[2, 2]

    def minor_sum(self):
        m = self
        return (m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
                + m[0, 0] * m[2, 2] - m[0, 2] * m[2, 0]
                + m[1, 1] * m[2, 2] - m[1, 2] * m[2, 1])


def det3(m: Matrix3):
    return (m[0, 0] * (m[1, 1] * m[2, 2] - m[1, 2] * m[2, 1])
            - m[0, 1] * (m[1, 0] * m[2, 2] - m[1, 2] * m[2, 0])
            + m[0, 2] * (m[1, 0] * m[2, 1] - m[1, 1] * m[2, 0]))


def charpoly3(m: Matrix3) -> Polynomial:
    """det(T*I - m) = T^3 - tr T^2 + c2 T - det."""
    field = QQ
    for e in m.entries:
        if isinstance(e, Fp):
            field = e.field
            break
    return Polynomial([-det3(m), m.minor_sum(), -m.trace(), 1], field)


def residue_vector(h: Polynomial, f: Polynomial) -> list:
    """Coordinates of h mod f in the basis 1, x, x^2."""
    r = h % f
    return [r.coeff(i) for i in range(3)]


def _check_monic_cubic(f: Polynomial):
    if f.degree != 3 or f.lc() != 1:
        raise ValueError(f"expected a monic cubic, got {f}")


def mult_matrix(h: Polynomial, f: Polynomial) -> Matrix3:
    """Matrix of multiplication by h on F[x]/(f) in the basis 1, x, x^2."""
    _check_monic_cubic(f)
    if h.degree > 2:
        raise ValueError("h must have degree <= 2")
    x = Polynomial.x(f.field)
    return Matrix3.from_columns([residue_vector(h * x ** i, f) for i in range(3)])


def algebra_map_matrix(h: Polynomial, f: Polynomial) -> Matrix3:
    """Matrix of z -> h from basis 1, z, z^2 to basis 1, x, x^2 of F[x]/(f)."""
    _check_monic_cubic(f)
    return Matrix3.from_columns([residue_vector(h ** i, f) for i in range(3)])
