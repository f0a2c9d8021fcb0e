"""Command-line front end.

Every subcommand writes one JSON (or verdict) line per result to stdout
and diagnostics to stderr.  Exit status: 0 success, 1 a verification
check failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .arith import QQ, PrimeField, render
from .checks import verify_field
from .curve import EllipticCurve, parse_curve
from .family import (
    FamilyContext,
    family_coeffs,
    phi_det,
    singularity_locus,
)
from .mod2 import DEFAULT_PRIME_BUDGET, class_over_fp, find_witness_fp, iso_fp, iso_q, rational_pattern
from .param3 import INFINITY, Param3Input, section3_curve, shape_of
from .records import group_by_signature, read_records, render_group

# Options whose values may start with "-" (negative rationals).
_VALUE_OPTIONS = ("--curve", "--other", "--u", "--v", "--t", "--d")


def _glue_values(argv):
    """Rewrite ``--curve -1,0`` as ``--curve=-1,0`` so argparse keeps negative values."""
    out = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_OPTIONS:
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def _emit(obj):
    print(json.dumps(obj, separators=(",", ":")))


def _field(args):
    return QQ if args.p is None else PrimeField(args.p)


def _curve(text, args) -> EllipticCurve:
    return parse_curve(text, args.p)


def _curve_record(E: EllipticCurve) -> dict:
    rec = {"a": render(E.a), "b": render(E.b)}
    if E.field is not QQ:
        rec["p"] = E.field.p
    return rec


def cmd_family(args) -> int:
    E = _curve(args.curve, args)
    F = _field(args)
    u, v = F(args.u), F(args.v)
    ctx = FamilyContext(E)
    alpha, beta = family_coeffs(ctx, u, v)
    member = EllipticCurve(alpha, beta, F)
    rec = _curve_record(E)
    rec.update(
        u=render(u),
        v=render(v),
        alpha=render(alpha),
        beta=render(beta),
        discriminant=render(member.discriminant),
        j=render(member.j),
        locus=render(singularity_locus(ctx, u, v)),
        phi_det=render(phi_det(ctx, u, v)),
    )
    _emit(rec)
    return 0


def cmd_class(args) -> int:
    E = _curve(args.curve, args)
    rec = _curve_record(E)
    cls = rational_pattern(E) if args.p is None else class_over_fp(E)
    rec["class"] = list(cls.degrees)
    _emit(rec)
    return 0


def cmd_check(args) -> int:
    E, E2 = _curve(args.curve, args), _curve(args.other, args)
    if args.p is None:
        print(iso_q(E, E2, args.primes))
    else:
        print("ISO" if iso_fp(E, E2) else "NOT_ISO pattern")
    return 0


def cmd_witness(args) -> int:
    E, E2 = _curve(args.curve, args), _curve(args.other, args)
    point = find_witness_fp(E, E2)
    _emit({"p": args.p, "point": None if point is None else [render(point.u), render(point.v)]})
    return 0


def cmd_param3(args) -> int:
    E = _curve(args.curve, args)
    F = _field(args)
    t = INFINITY if args.t == INFINITY else F(args.t)
    member = section3_curve(Param3Input(E, t, F(args.d)))
    rec = _curve_record(member)
    rec.update(shape=shape_of(E).value, t=args.t if t == INFINITY else render(t), d=render(F(args.d)))
    _emit(rec)
    return 0


def cmd_verify(args) -> int:
    curves = None if args.curve is None else [_curve(args.curve, args)]
    results, coverage = verify_field(args.p, curves, witness_search=not args.skip_witness_search)
    for res in results:
        _emit(res.as_record())
    if args.coverage_out:
        path = Path(args.coverage_out)
        path.parent.mkdir(parents=True, exist_ok=True)
        with path.open("w") as fh:
            for rep in coverage:
                fh.write(json.dumps(rep.as_record(), separators=(",", ":")) + "\n")
    covered = sum(rep.covers for rep in coverage)
    _emit({"check": "section3_coverage", "p": args.p, "curves": len(coverage), "covered": covered})
    return 0 if all(res.passed for res in results) else 1


def cmd_group(args) -> int:
    errors = []
    if args.input == "-":
        records = read_records(sys.stdin, errors)
    else:
        with open(args.input) as fh:
            records = read_records(fh, errors)
    for err in errors:
        print(f"skipped: {err}", file=sys.stderr)
    for sig, members in group_by_signature(records, args.primes):
        print(render_group(sig, members))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mod2reps",
        description="Elliptic curves with a prescribed mod-2 representation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def field_opts(sp, required_p=False):
        grp = sp.add_mutually_exclusive_group(required=required_p)
        grp.add_argument("--p", type=int, help="work over GF(p)")
        if not required_p:
            grp.add_argument("--rational", action="store_true", help="work over Q (default)")

    sp = sub.add_parser("family", help="member E_{u,v} of the family of a base curve")
    sp.add_argument("--curve", required=True, help="base curve 'a,b'")
    sp.add_argument("--u", required=True)
    sp.add_argument("--v", required=True)
    field_opts(sp)
    sp.set_defaults(func=cmd_family)

    sp = sub.add_parser("class", help="mod-2 class (factorization type of the 2-division cubic)")
    sp.add_argument("--curve", required=True)
    field_opts(sp)
    sp.set_defaults(func=cmd_class)

    sp = sub.add_parser("check", help="decide E[2] = E'[2]")
    sp.add_argument("--curve", required=True)
    sp.add_argument("--other", required=True)
    sp.add_argument("--primes", type=int, default=DEFAULT_PRIME_BUDGET, help="prime budget over Q")
    field_opts(sp)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("witness", help="search P^1(GF(p)) for a j-invariant witness")
    sp.add_argument("--curve", required=True)
    sp.add_argument("--other", required=True)
    field_opts(sp, required_p=True)
    sp.set_defaults(func=cmd_witness)

    sp = sub.add_parser("param3", help="member of the Legendre-derived t-family, twisted by d")
    sp.add_argument("--curve", required=True)
    sp.add_argument("--t", default="0", help="parameter value or 'inf'")
    sp.add_argument("--d", default="1", help="nonzero twist parameter")
    field_opts(sp)
    sp.set_defaults(func=cmd_param3)

    sp = sub.add_parser("verify", help="exhaustive identity checks over GF(p)")
    sp.add_argument("--curve", help="restrict to one base curve")
    sp.add_argument("--coverage-out", help="write per-curve coverage records (JSON lines)")
    sp.add_argument("--skip-witness-search", action="store_true", help="skip the pairwise witness check")
    field_opts(sp, required_p=True)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("group", help="group a curve corpus by mod-2 signature")
    sp.add_argument("input", nargs="?", default="-", help="JSON-lines file, '-' for stdin")
    sp.add_argument("--primes", type=int, default=DEFAULT_PRIME_BUDGET)
    sp.set_defaults(func=cmd_group)
    return parser


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(_glue_values(argv))
    try:
        return args.func(args)
    except (ValueError, ZeroDivisionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
