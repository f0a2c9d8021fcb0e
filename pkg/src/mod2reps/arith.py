"""Exact field arithmetic: the rationals and prime fields GF(p), p > 3.

Rationals are plain :class:`fractions.Fraction` values.  Prime field
elements are :class:`Fp` instances bound to a :class:`PrimeField`; both
support the usual operators, so polynomial and curve code is written once
and runs over either field.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterator, Union

import gmpy2

MAX_MODULUS = 1 << 61

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_RATIONAL_RE = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


class NoSquareRootError(ValueError):
    pass


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for all n < 3.3 * 10**24."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for base in _MR_BASES:
        x = pow(base, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def next_prime(n: int) -> int:
    """Smallest prime strictly greater than n."""
    n += 1
    while not is_prime(n):
        n += 1
    return n


class PrimeField:
    """The field GF(p) for a prime 3 < p <= 2**61."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        p = int(p)
        if p <= 3:
            raise ValueError(f"characteristic must exceed 3, got {p}")
        if p > MAX_MODULUS:
            raise ValueError(f"modulus {p} exceeds 2**61")
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p

    def __call__(self, x) -> Fp:
        if isinstance(x, Fp):
            if x.field.p != self.p:
                raise ValueError(f"cannot coerce GF({x.field.p}) element into GF({self.p})")
            return x
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"{x} has no image in GF({self.p})")
            return Fp(x.numerator * pow(x.denominator, -1, self.p), self)
        if isinstance(x, str):
            return self(parse_rational(x))
        return Fp(int(x), self)

    @property
    def zero(self) -> Fp:
        return Fp(0, self)

    @property
    def one(self) -> Fp:
        return Fp(1, self)

    def elements(self) -> Iterator[Fp]:
        return (Fp(i, self) for i in range(self.p))

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


class RationalField:
    """The field Q; elements are :class:`fractions.Fraction`."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __call__(self, x) -> Fraction:
        if isinstance(x, Fp):
            raise ValueError("cannot lift a prime field element to Q")
        if isinstance(x, str):
            return parse_rational(x)
        return Fraction(x)

    zero = Fraction(0)
    one = Fraction(1)

    def __repr__(self):
        return "QQ"


QQ = RationalField()
Field = Union[PrimeField, RationalField]


class Fp:
    """An element of GF(p).  Immutable; ints and Fractions coerce on the fly."""

    __slots__ = ("value", "field")

    def __init__(self, value: int, field: PrimeField):
        self.value = value % field.p
        self.field = field

    def _coerce(self, other):
        if isinstance(other, Fp):
            if other.field.p != self.field.p:
                raise ValueError(f"GF({self.field.p}) and GF({other.field.p}) elements do not mix")
            return other.value
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return self.field(other).value
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Fp(self.value + o, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Fp(self.value - o, self.field)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Fp(o - self.value, self.field)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Fp(self.value * o, self.field)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * field_inverse(Fp(o, self.field))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Fp(o, self.field) * field_inverse(self)

    def __neg__(self):
        return Fp(-self.value, self.field)

    def __pos__(self):
        return self

    def __pow__(self, e: int):
        if e < 0:
            return Fp(pow(field_inverse(self).value, -e, self.field.p), self.field)
        return Fp(pow(self.value, e, self.field.p), self.field)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self.value - o) % self.field.p == 0

    def __hash__(self):
        return hash(self.value)

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __index__(self):
        return self.value

    def __lt__(self, other):
        # Ordering on representatives in [0, p); only used for determinism.
        return self.value < self._coerce(other) % self.field.p

    def __repr__(self):
        return f"{self.value} mod {self.field.p}"

    def __str__(self):
        return str(self.value)


def field_of(x) -> Field:
    return x.field if isinstance(x, Fp) else QQ


def parse_rational(text: str) -> Fraction:
    """Parse ``[sign]digits[/digits]`` into a canonical Fraction."""
    m = _RATIONAL_RE.match(text.strip())
    if m is None:
        raise ValueError(f"not a rational number: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def render_rational(q) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def render(x) -> str:
    """Text form of a field element: residue for GF(p), lowest terms for Q."""
    if isinstance(x, Fp):
        return str(x.value)
    return render_rational(x)


def field_inverse(x):
    if isinstance(x, Fp):
        if x.value == 0:
            raise ZeroDivisionError("0 has no inverse")
        return Fp(pow(x.value, -1, x.field.p), x.field)
    if x == 0:
        raise ZeroDivisionError("0 has no inverse")
    return 1 / Fraction(x)


def _is_int_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


def is_square(x) -> bool:
    """Whether x is a square in its field (Euler's criterion over GF(p))."""
    if isinstance(x, Fp):
        if x.value == 0:
            return True
        return pow(x.value, (x.field.p - 1) // 2, x.field.p) == 1
    x = Fraction(x)
    return _is_int_square(x.numerator) and _is_int_square(x.denominator)


def sqrt_mod_p(x: Fp) -> Fp:
    """Square root by Tonelli-Shanks; the smaller representative is returned."""
    if not is_square(x):
        raise NoSquareRootError(f"{x.value} is not a square mod {x.field.p}")
    p = x.field.p
    n = x.value
    if n == 0:
        return x.field.zero
    if p % 4 == 3:
        r = pow(n, (p + 1) // 4, p)
    else:
        q, s = p - 1, 0
        while q % 2 == 0:
            q //= 2
            s += 1
        z = 2
        while pow(z, (p - 1) // 2, p) != p - 1:
            z += 1
        m, c, t, r = s, pow(z, q, p), pow(n, q, p), pow(n, (q + 1) // 2, p)
        while t != 1:
            i, t2 = 0, t
            while t2 != 1:
                t2 = t2 * t2 % p
                i += 1
            bexp = pow(c, 1 << (m - i - 1), p)
            m, c = i, bexp * bexp % p
            t, r = t * c % p, r * bexp % p
    return Fp(min(r, p - r), x.field)


def kth_power_exists(x, k: int) -> bool:
    """Whether the nonzero element x is a k-th power in its field."""
    if k <= 0:
        raise ValueError(f"k must be a positive integer, got {k}")
    if not x:
        raise ValueError("x must be nonzero")
    if isinstance(x, Fp):
        p = x.field.p
        return pow(x.value, (p - 1) // math.gcd(k, p - 1), p) == 1
    x = Fraction(x)
    if x < 0 and k % 2 == 0:
        return False
    return bool(gmpy2.iroot(abs(x.numerator), k)[1] and gmpy2.iroot(x.denominator, k)[1])
