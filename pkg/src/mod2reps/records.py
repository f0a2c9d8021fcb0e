"""Line-delimited curve records and grouping by mod-2 signature.

Each input line is a JSON object ``{"label"?: str, "a": str, "b": str, "p"?: int}``
with rationals in ``[sign]n[/d]`` form.  Records without ``p`` are curves
over Q.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable

from .arith import QQ, PrimeField, parse_rational, render_rational
from .curve import EllipticCurve, SingularCurveError, reduce_mod_p
from .mod2 import DEFAULT_PRIME_BUDGET, class_over_fp, shared_good_primes
from .poly import Mod2Class


class RecordError(ValueError):
    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}" if lineno is not None else message)


@dataclass(frozen=True)
class CurveRecord:
    label: str | None
    a: str
    b: str
    p: int | None = None

    def curve(self) -> EllipticCurve:
        field = QQ if self.p is None else PrimeField(self.p)
        return EllipticCurve(field(parse_rational(self.a)), field(parse_rational(self.b)), field)

    @property
    def name(self) -> str:
        return self.label if self.label is not None else f"{self.a},{self.b}"

    def render(self) -> str:
        obj = {}
        if self.label is not None:
            obj["label"] = self.label
        obj["a"] = self.a
        obj["b"] = self.b
        if self.p is not None:
            obj["p"] = self.p
        return json.dumps(obj, separators=(",", ":"))


def parse_curve_record(line: str, lineno: int | None = None) -> CurveRecord:
    try:
        obj = json.loads(line)
    except json.JSONDecodeError as exc:
        raise RecordError(f"malformed JSON: {exc.msg}", lineno) from None
    if not isinstance(obj, dict):
        raise RecordError("record must be a JSON object", lineno)
    unknown = set(obj) - {"label", "a", "b", "p"}
    if unknown:
        raise RecordError(f"unknown fields {sorted(unknown)}", lineno)
    try:
        a = render_rational(parse_rational(str(obj["a"])))
        b = render_rational(parse_rational(str(obj["b"])))
    except KeyError as exc:
        raise RecordError(f"missing field {exc.args[0]!r}", lineno) from None
    except ValueError as exc:
        raise RecordError(str(exc), lineno) from None
    p = obj.get("p")
    if p is not None and (isinstance(p, bool) or not isinstance(p, int)):
        raise RecordError(f"p must be an integer, got {p!r}", lineno)
    label = obj.get("label")
    if label is not None and not isinstance(label, str):
        raise RecordError("label must be a string", lineno)
    rec = CurveRecord(label, a, b, p)
    try:
        rec.curve()
    except SingularCurveError as exc:
        raise RecordError(f"singular curve: {exc}", lineno) from None
    except ValueError as exc:
        raise RecordError(str(exc), lineno) from None
    return rec


def read_records(lines: Iterable[str], errors: list | None = None) -> list[CurveRecord]:
    """Parse every non-blank line; bad lines are collected in `errors` and skipped."""
    out = []
    for lineno, line in enumerate(lines, 1):
        if not line.strip():
            continue
        try:
            out.append(parse_curve_record(line, lineno))
        except RecordError as exc:
            if errors is None:
                raise
            errors.append(exc)
    return out


Signature = tuple[tuple[int, Mod2Class], ...]


def signature_primes(curves, prime_budget: int) -> list[int]:
    return list(shared_good_primes(curves, prime_budget))


def class_signature(E: EllipticCurve, primes) -> Signature:
    return tuple((p, class_over_fp(reduce_mod_p(E, p))) for p in primes)


def group_by_signature(records, prime_budget: int = DEFAULT_PRIME_BUDGET):
    """Partition records by mod-2 signature; groups come out sorted by signature.

    Over Q the signature is the Frobenius type at the first `prime_budget`
    primes of good reduction shared by every record.  Over GF(p) it is
    the single class (p, type).
    """
    records = list(records)
    if not records:
        return []
    ps = {r.p for r in records}
    if len(ps) != 1:
        raise ValueError(f"records mix fields: {sorted(ps, key=lambda x: -1 if x is None else x)}")
    curves = [r.curve() for r in records]
    (p,) = ps
    if p is None:
        primes = signature_primes(curves, prime_budget)
        sigs = [class_signature(E, primes) for E in curves]
    else:
        sigs = [((p, class_over_fp(E)),) for E in curves]
    groups: dict[Signature, list[CurveRecord]] = {}
    for rec, sig in zip(records, sigs):
        groups.setdefault(sig, []).append(rec)
    key = lambda sig: tuple((q, cls.degrees) for q, cls in sig)  # noqa: E731
    return [(sig, groups[sig]) for sig in sorted(groups, key=key)]


def render_group(sig: Signature, members) -> str:
    return json.dumps(
        {
            "signature": [[q, list(cls.degrees)] for q, cls in sig],
            "members": [m.name for m in members],
        },
        separators=(",", ":"),
    )
