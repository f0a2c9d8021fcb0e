"""Elliptic curves sharing a mod-2 Galois representation, over Q and GF(p)."""

from .arith import QQ, Fp, PrimeField
from .curve import EllipticCurve, is_isomorphic, j_invariant, quadratic_twist
from .family import FamilyContext, UVPoint, family_coeffs, family_curve
from .mod2 import IsoVerdict, class_over_fp, iso_fp, iso_q
from .param3 import Param3Input, section3_curve
from .poly import Mod2Class, Polynomial

__all__ = [
    "QQ",
    "Fp",
    "PrimeField",
    "EllipticCurve",
    "is_isomorphic",
    "j_invariant",
    "quadratic_twist",
    "FamilyContext",
    "UVPoint",
    "family_coeffs",
    "family_curve",
    "IsoVerdict",
    "class_over_fp",
    "iso_fp",
    "iso_q",
    "Param3Input",
    "section3_curve",
    "Mod2Class",
    "Polynomial",
]
