"""Command-line interface.

Subcommands cover the classical codes (prm), the four quantum
construction families (css, css-subfield, hermitian,
hermitian-subfield), and the catalogue sweep (table).  Exit codes:
0 success, 2 usage or precondition error, 3 a verification check failed
against ground truth, 4 a containment or hull sweep could not be
completed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .codes import min_weight_certificate
from .errors import (
    ContainmentFailed,
    DegreeOutOfRange,
    DegreeTooSmall,
    PreconditionViolated,
    PrmqecError,
    SweepExhausted,
)
from .gf import factor_prime_power, field_make
from .prm import prm_code, prm_dimension, prm_dual_min_distance, \
    prm_min_distance
from .quantum import (
    construct_css_prm,
    construct_css_subfield,
    construct_hermitian_prm,
    construct_hermitian_subfield,
    gv_asymmetric_exists,
    gv_symmetric_exists,
)
from .tables import KNOWN_TABLE, find_entry, run_entry

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_MISMATCH = 3
EXIT_UNREACHABLE = 4


def _field(q: int):
    return field_make(*factor_prime_power(q))


def _emit(result: dict, fmt: str):
    if fmt == "json":
        print(json.dumps(result, sort_keys=True, separators=(",", ":")))
    elif fmt == "csv":
        flat = _flatten(result)
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=sorted(flat))
        writer.writeheader()
        writer.writerow(flat)
        print(buf.getvalue(), end="")
    else:
        for key in sorted(result):
            print(f"{key}: {result[key]}")


def _flatten(d: dict, prefix: str = "") -> dict:
    out = {}
    for k, v in d.items():
        key = f"{prefix}{k}"
        if isinstance(v, dict):
            out.update(_flatten(v, key + "."))
        else:
            out[key] = v
    return out


def _cert_check(code, expected: int, budget: int, label: str,
                result: dict) -> bool:
    cert = min_weight_certificate(code, budget)
    result[f"certified_{label}"] = {
        "kind": cert.kind, "value": cert.value, "steps": cert.steps,
        "budget_exhausted": cert.budget_exhausted,
    }
    if cert.is_exact:
        return cert.value == expected
    return cert.value <= expected


def cmd_prm(args) -> int:
    field = _field(args.q)
    verify = set(args.verify or [])
    k = prm_dimension(args.q, args.m, args.d)
    try:
        dual_dist = prm_dual_min_distance(args.q, args.m, args.d)
    except DegreeOutOfRange:
        dual_dist = None  # the dual carries the all-ones summand
    result = {
        "q": args.q, "m": args.m, "d": args.d,
        "n": (args.q ** (args.m + 1) - 1) // (args.q - 1),
        "k": k,
        "min_distance": prm_min_distance(args.q, args.m, args.d),
        "dual_min_distance": dual_dist,
    }
    ok = True
    code = None
    if "formulas" in verify or "rank" in verify:
        code = prm_code(field, args.m, args.d)
        result["rank_dimension"] = code.k
        ok &= code.k == k
    if "distance" in verify:
        code = code or prm_code(field, args.m, args.d)
        ok &= _cert_check(code, result["min_distance"], args.budget,
                          "min_distance", result)
    result["verified"] = ok
    _emit(result, args.output)
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_css(args) -> int:
    cons = construct_css_prm(args.q, args.m, args.d1, args.d2, args.c)
    rec = cons.record
    result = rec.to_dict()
    result["gv_exists"] = gv_asymmetric_exists(
        rec.q, rec.n, rec.kappa, rec.c, rec.delta_z, rec.delta_x)
    result["gv_surpasses"] = not result["gv_exists"]
    verify = set(args.verify or [])
    ok = True
    if "formulas" in verify:
        ok &= cons.c1.k == prm_dimension(args.q, args.m, args.d2)
        ok &= cons.c2.k == prm_dimension(args.q, args.m, args.d1)
    if "rank" in verify:
        from .quantum import css_params
        n, kappa, c = css_params(cons.c1, cons.c2)
        ok &= (n, kappa, c) == (rec.n, rec.kappa, rec.c)
    if "distance" in verify:
        ok &= _cert_check(cons.c1.dual(), rec.delta_z, args.budget,
                          "delta_z", result)
        ok &= _cert_check(cons.c2.dual(), rec.delta_x, args.budget,
                          "delta_x", result)
    result["verified"] = ok
    _emit(result, args.output)
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_css_subfield(args) -> int:
    cons = construct_css_subfield(args.q, args.s, args.m, args.d1, args.d2,
                                  budget=args.budget)
    rec = cons.record
    result = rec.to_dict()
    result["gv_exists"] = gv_asymmetric_exists(
        rec.q, rec.n, rec.kappa, rec.c, rec.delta_z, rec.delta_x)
    result["gv_surpasses"] = not result["gv_exists"]
    ok = True
    if "rank" in set(args.verify or []):
        from .quantum import css_params
        n, kappa, c = css_params(cons.c1, cons.c2)
        ok &= (n, kappa, c) == (rec.n, rec.kappa, rec.c)
    result["verified"] = ok
    _emit(result, args.output)
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_hermitian(args) -> int:
    cons = construct_hermitian_prm(args.q, args.m, args.d, args.c)
    rec = cons.record
    result = rec.to_dict()
    result["gv_exists"] = gv_symmetric_exists(
        rec.q, rec.n, rec.kappa, rec.delta)
    result["gv_surpasses"] = not result["gv_exists"]
    verify = set(args.verify or [])
    ok = True
    if "formulas" in verify:
        ok &= cons.code.k == prm_dimension(args.q * args.q, args.m, args.d)
    if "rank" in verify:
        from .quantum import hermitian_params
        ok &= hermitian_params(cons.code) == (rec.n, rec.kappa, rec.c)
    if "distance" in verify:
        from .codes import hermitian_dual
        ok &= _cert_check(hermitian_dual(cons.code), rec.delta, args.budget,
                          "delta", result)
    result["verified"] = ok
    _emit(result, args.output)
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_hermitian_subfield(args) -> int:
    cons = construct_hermitian_subfield(args.q, args.s, args.m, args.lam,
                                        budget=args.budget)
    rec = cons.record
    result = rec.to_dict()
    result["gv_exists"] = gv_symmetric_exists(
        rec.q, rec.n, rec.kappa, rec.delta)
    result["gv_surpasses"] = not result["gv_exists"]
    ok = True
    if "rank" in set(args.verify or []):
        from .quantum import hermitian_params
        ok &= hermitian_params(cons.code) == (rec.n, rec.kappa, rec.c)
    result["verified"] = ok
    _emit(result, args.output)
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_table(args) -> int:
    entries = [find_entry(args.id)] if args.id else KNOWN_TABLE
    ok = True
    results = []
    for entry in entries:
        res = run_entry(entry, budget=args.budget)
        results.append(res)
        ok &= res["all_match"]
        if args.output == "text":
            status = "ok" if res["all_match"] else "MISMATCH"
            print(f"{entry.entry_id}: {status}  expected={res['expected']}")
    if args.output == "json":
        print(json.dumps(results, sort_keys=True, separators=(",", ":")))
    elif args.output == "csv":
        flat = [_flatten(r) for r in results]
        names = sorted({k for row in flat for k in row})
        writer = csv.DictWriter(sys.stdout, fieldnames=names)
        writer.writeheader()
        writer.writerows(flat)
    return EXIT_OK if ok else EXIT_MISMATCH


def _add_common(p: argparse.ArgumentParser):
    p.add_argument("--verify", action="append",
                   choices=["formulas", "rank", "distance"],
                   help="extra checks to run (repeatable)")
    p.add_argument("--budget", type=int, default=10 ** 8,
                   help="candidate budget for distance certification")
    p.add_argument("--output", choices=["json", "csv", "text"],
                   default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="prmqec",
        description="Projective Reed-Muller codes and the quantum codes "
                    "built from their hulls")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("prm", help="classical projective Reed-Muller code")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=cmd_prm)

    p = sub.add_parser("css", help="CSS code from a PRM pair")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--d1", type=int, required=True)
    p.add_argument("--d2", type=int, required=True)
    p.add_argument("--c", type=int, default=0)
    _add_common(p)
    p.set_defaults(func=cmd_css)

    p = sub.add_parser("css-subfield",
                       help="CSS code from subfield subcodes of a PRM pair")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--d1", type=int, required=True)
    p.add_argument("--d2", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=cmd_css_subfield)

    p = sub.add_parser("hermitian", help="Hermitian construction on a PRM code")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--c", type=int, default=0)
    _add_common(p)
    p.set_defaults(func=cmd_hermitian)

    p = sub.add_parser("hermitian-subfield",
                       help="Hermitian construction on a subfield subcode")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=cmd_hermitian_subfield)

    p = sub.add_parser("table", help="re-derive the known parameter table")
    p.add_argument("--id", help="run a single entry")
    _add_common(p)
    p.set_defaults(func=cmd_table)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ContainmentFailed, SweepExhausted) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_UNREACHABLE
    except (PreconditionViolated, DegreeOutOfRange, DegreeTooSmall,
            KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except PrmqecError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
