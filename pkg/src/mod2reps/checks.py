"""Exhaustive verification of the family identities over a small prime field."""

from __future__ import annotations

from dataclasses import dataclass, field

from .arith import PrimeField
from .curve import EllipticCurve, all_curves, discriminant
from .family import (
    FamilyContext,
    criteria_values,
    family_coeffs,
    phi_charpoly,
    phi_det,
    singularity_locus,
    x_coefficient_numerator,
)
from .mod2 import class_over_fp, class_set_fp, family_image_fp, find_witness_fp
from .param3 import CoverageReport, section3_coverage

CHECKS = (
    "family_image_sets",
    "charpoly_oracle",
    "disc_formula",
    "j_ratio",
    "phi_det",
    "witness_search",
    "section3_membership",
)


@dataclass
class CheckResult:
    name: str
    p: int
    cases: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def as_record(self) -> dict:
        return {
            "check": self.name,
            "p": self.p,
            "cases": self.cases,
            "failures": len(self.failures),
            "first_failures": self.failures[:5],
            "passed": self.passed,
        }


def _uv_grid(F: PrimeField):
    return [(u, v) for u in F.elements() for v in F.elements()]


def check_family_image_sets(E: EllipticCurve, res: CheckResult):
    res.cases += 1
    if class_set_fp(E) != family_image_fp(E):
        res.failures.append(str(E))


def check_charpoly_oracle(E: EllipticCurve, res: CheckResult):
    ctx = FamilyContext(E)
    F = E.field
    for u, v in _uv_grid(F):
        res.cases += 1
        alpha, beta = family_coeffs(ctx, u, v, check=False)
        cp = phi_charpoly(ctx, u, v)
        if cp.coeffs != (beta, alpha, F.zero, F.one)[: len(cp.coeffs)] or cp.degree != 3:
            res.failures.append(f"{E} u={u} v={v}")


def check_disc_and_j(E: EllipticCurve, disc_res: CheckResult, j_res: CheckResult):
    ctx = FamilyContext(E)
    for u, v in _uv_grid(E.field):
        locus = singularity_locus(ctx, u, v)
        if not locus:
            continue
        member = EllipticCurve(*family_coeffs(ctx, u, v), E.field)
        disc_res.cases += 1
        if discriminant(member) != 3 ** 6 * locus ** 2 * discriminant(E):
            disc_res.failures.append(f"{E} u={u} v={v}")
        if E.a:
            j_res.cases += 1
            lhs = member.j * 27 * E.a ** 3 * locus ** 2
            if lhs != x_coefficient_numerator(ctx, u, v) ** 3 * E.j:
                j_res.failures.append(f"{E} u={u} v={v}")


def check_phi_det(E: EllipticCurve, res: CheckResult):
    ctx = FamilyContext(E)
    for u, v in _uv_grid(E.field):
        res.cases += 1
        det = phi_det(ctx, u, v)
        if det != 27 * singularity_locus(ctx, u, v):
            res.failures.append(f"{E} u={u} v={v}")


def check_witness_search(E: EllipticCurve, others, res: CheckResult):
    """Witness exists iff same class; criteria (i) and (ii) agree at the witness."""
    cls = class_over_fp(E)
    for E2 in others:
        if E2.j == 0 or E2.j == 1728:
            continue
        res.cases += 1
        same = class_over_fp(E2) is cls
        point = find_witness_fp(E, E2)
        if same != (point is not None):
            res.failures.append(f"{E} vs {E2}: same_class={same} witness={point}")
        elif point is not None and E.a and E.b:
            crit = criteria_values(E, E2, point)
            if crit["i"] != crit["ii"]:
                res.failures.append(f"{E} vs {E2}: criteria disagree at {point}")


def verify_field(p: int, curves=None, *, witness_search: bool = True):
    """Run every check over GF(p) for `curves` (default: all nonsingular curves).

    Returns the per-check results and the t-family coverage reports.
    """
    F = PrimeField(p)
    everything = list(all_curves(F))
    curves = everything if curves is None else list(curves)
    results = {name: CheckResult(name, p) for name in CHECKS}
    coverage: list[CoverageReport] = []
    for E in curves:
        check_family_image_sets(E, results["family_image_sets"])
        check_charpoly_oracle(E, results["charpoly_oracle"])
        check_disc_and_j(E, results["disc_formula"], results["j_ratio"])
        check_phi_det(E, results["phi_det"])
        if witness_search:
            check_witness_search(E, everything, results["witness_search"])
        report = section3_coverage(E)
        coverage.append(report)
        res = results["section3_membership"]
        res.cases += 1
        if not report.membership:
            res.failures.append(str(E))
    if not witness_search:
        del results["witness_search"]
    return list(results.values()), coverage
