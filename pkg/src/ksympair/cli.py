"""Command-line front end: analyze a pair, verify table rows, list the catalog.

Exit codes: 0 success (all rows matched for verify-table), 1 verification
mismatch, 2 usage error, 3 error raised by the math layer.  JSON reports are
deterministic: two identical invocations differ at most in "timing_ms".
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional

from .automorphisms import fitting_decomposition, is_effective, is_prime
from .catalog import (
    CATALOG_NAMES,
    TorusWeights,
    generate_table_rows,
    get_entry,
    inner_automorphism_from_torus,
    permutation_automorphism,
)
from .exceptions import KsymError
from .scalars import format_exact
from .symplectic import symplectic_verdict


@dataclass
class AnalysisReport:
    """Machine-readable outcome of one pair analysis."""

    input: str
    field: str
    dim_h: int
    dim_m: int
    effective: bool
    prime: bool
    symplectic: bool
    injective_element: Optional[list]
    checks: dict
    timing_ms: int

    def to_json_dict(self):
        return {
            "input": self.input,
            "field": self.field,
            "dim_h": self.dim_h,
            "dim_m": self.dim_m,
            "effective": self.effective,
            "prime": self.prime,
            "symplectic": self.symplectic,
            "injective_element": self.injective_element,
            "checks": dict(self.checks),
            "timing_ms": self.timing_ms,
        }

    @classmethod
    def from_json_dict(cls, data):
        return cls(
            input=data["input"],
            field=data["field"],
            dim_h=data["dim_h"],
            dim_m=data["dim_m"],
            effective=data["effective"],
            prime=data["prime"],
            symplectic=data["symplectic"],
            injective_element=data["injective_element"],
            checks=dict(data["checks"]),
            timing_ms=data["timing_ms"],
        )


def _serialize_element(z, exact):
    if z is None:
        return None
    if exact:
        return [format_exact(x) for x in z]
    return [float(x) for x in z]


def run_pair(description, algebra, nu):
    """Full pipeline on a validated pair, timed."""
    start = time.monotonic()
    d = fitting_decomposition(nu)
    effective = is_effective(d)
    prime = is_prime(d)
    verdict = symplectic_verdict(algebra, nu)
    elapsed = int(round((time.monotonic() - start) * 1000))
    checks = {
        "nondegenerate": verdict.checks.nondegenerate_on_m,
        "closed": verdict.checks.closed_cocycle,
        "ad_h_invariant": verdict.checks.ad_h_invariant,
        "nu_invariant": verdict.checks.nu_invariant,
        "nu_fixes_Z": verdict.checks.nu_fixes_Z,
    }
    return AnalysisReport(
        input=description,
        field=algebra.field,
        dim_h=d.h.dim,
        dim_m=d.m.dim,
        effective=effective,
        prime=prime,
        symplectic=verdict.is_symplectic,
        injective_element=_serialize_element(verdict.Z, algebra.exact),
        checks=checks,
        timing_ms=elapsed,
    )


def _print_report(report, out):
    print(f"pair: {report.input}", file=out)
    print(f"field: {report.field}", file=out)
    print(f"dim h = {report.dim_h}, dim m = {report.dim_m}", file=out)
    print(f"effective: {_yn(report.effective)}   prime: {_yn(report.prime)}", file=out)
    print(f"symplectic: {_yn(report.symplectic).upper()}", file=out)
    if report.injective_element is not None:
        print(f"injective element Z: [{', '.join(map(str, report.injective_element))}]",
              file=out)
    flags = " ".join(f"{k}={_yn(v)}" for k, v in report.checks.items())
    print(f"checks: {flags}", file=out)
    print(f"time: {report.timing_ms} ms", file=out)


def _yn(flag):
    return "yes" if flag else "no"


def _write_json(payload, path):
    text = json.dumps(payload, indent=2) + "\n"
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _usage_error(message):
    print(f"usage error: {message}", file=sys.stderr)
    return 2


def cmd_analyze(args):
    if args.order < 2:
        return _usage_error("a k-symmetric pair needs --order k >= 2")
    if args.order > 48:
        return _usage_error("--order is capped at 48")
    if (args.weights is None) == (args.permutation is None):
        return _usage_error("exactly one of --weights or --permutation is required")
    try:
        entry = get_entry(args.algebra)
    except KsymError as exc:
        return _usage_error(str(exc))

    try:
        if args.weights is not None:
            try:
                weights = tuple(int(w) for w in args.weights.split(","))
            except ValueError:
                return _usage_error("--weights must be a comma-separated integer list")
            from .catalog import _expected_weight_count

            want = _expected_weight_count(entry.family, entry.n)
            if len(weights) != want:
                return _usage_error(f"{entry.name} takes {want} weights, got {len(weights)}")
            nu = inner_automorphism_from_torus(entry, TorusWeights(weights, args.order))
            algebra = nu.algebra
            desc = f"algebra={entry.name} order={args.order} weights={','.join(map(str, weights))}"
        else:
            copies = args.permutation
            if copies != args.order:
                return _usage_error("--permutation copy count must equal --order")
            algebra, nu = permutation_automorphism([entry] * copies, copies)
            desc = f"algebra={entry.name} order={args.order} permutation={copies}"
        if args.tolerance is not None and not algebra.exact:
            algebra.tol = args.tolerance
        report = run_pair(desc, algebra, nu)
    except KsymError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    _print_report(report, sys.stdout)
    if args.json:
        _write_json(report.to_json_dict(), args.json)
    return 0


def _verify_one(index, row):
    desc = row.entry.table_row or row.entry.name
    report = run_pair(desc, row.nu.algebra, row.nu)
    matched = report.symplectic == row.expected_symplectic
    return index, report, matched


def cmd_verify_table(args):
    if args.table not in (1, 2, 3):
        return _usage_error("--table must be 1, 2 or 3")
    if not 1 <= args.max_rank <= 3:
        return _usage_error("--max-rank must be between 1 and 3")
    try:
        rows = generate_table_rows(args.table, args.max_rank)
        workers = 1
        env = os.environ.get("KSYM_THREADS")
        if env:
            try:
                workers = max(1, int(env))
            except ValueError:
                return _usage_error("KSYM_THREADS must be a positive integer")
        results = [None] * len(rows)
        if workers > 1 and len(rows) > 1:
            with ThreadPoolExecutor(max_workers=min(workers, len(rows))) as pool:
                for index, report, matched in pool.map(
                        lambda pair: _verify_one(*pair), enumerate(rows)):
                    results[index] = (report, matched)
        else:
            for index, row in enumerate(rows):
                _, report, matched = _verify_one(index, row)
                results[index] = (report, matched)
    except KsymError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3

    failures = 0
    for index, (report, matched) in enumerate(results):
        status = "PASS" if matched else "FAIL"
        got = "symplectic" if report.symplectic else "not symplectic"
        print(f"row {index:02d} {status} [{got}, {report.timing_ms} ms] {report.input}")
        if not matched:
            failures += 1
    print(f"{len(rows) - failures}/{len(rows)} rows match expectation")
    if args.json:
        _write_json([rep.to_json_dict() for rep, _ in results], args.json)
    return 0 if failures == 0 else 1


def cmd_catalog(args):
    entries = []
    for name in CATALOG_NAMES:
        if args.filter and args.filter not in name:
            continue
        entry = get_entry(name)
        entries.append({
            "name": entry.name,
            "dim": entry.algebra.dim,
            "simple": entry.simple,
            "involutions": sorted(entry.standard_involutions),
        })
    for item in entries:
        invs = ", ".join(item["involutions"])
        simple = "simple" if item["simple"] else "not simple"
        print(f"{item['name']:<6} dim {item['dim']:>3}  {simple:<10}  involutions: {invs}")
    if args.json:
        _write_json(entries, args.json)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="ksympair",
        description="symplectic analysis of k-symmetric Lie algebra pairs")
    sub = parser.add_subparsers(dest="command", required=True)

    p_an = sub.add_parser("analyze", help="analyze one (algebra, automorphism) pair")
    p_an.add_argument("--algebra", required=True,
                      help="catalog name (su2..su4, so3..so8, sp1..sp3, sl2r..sl4r)")
    p_an.add_argument("--order", type=int, required=True, help="automorphism order k >= 2")
    p_an.add_argument("--weights",
                      help="comma-separated torus weights: one per diagonal "
                           "slot for su/sp, one per rotation plane for so/sl")
    p_an.add_argument("--permutation", type=int,
                      help="number of identical copies permuted cyclically")
    p_an.add_argument("--json", help="write the report as JSON to this path ('-' = stdout)")
    p_an.add_argument("--tolerance", type=float,
                      help="rank tolerance for float paths (default 1e-9)")
    p_an.set_defaults(func=cmd_analyze)

    p_vt = sub.add_parser("verify-table", help="re-verify classification table rows")
    p_vt.add_argument("--table", type=int, required=True, help="table number: 1, 2 or 3")
    p_vt.add_argument("--max-rank", type=int, required=True, help="rank bound, at most 3")
    p_vt.add_argument("--json", help="write all row reports as a JSON array")
    p_vt.set_defaults(func=cmd_verify_table)

    p_cat = sub.add_parser("catalog", help="list available algebras")
    p_cat.add_argument("--json", help="write the listing as JSON ('-' = stdout)")
    p_cat.add_argument("--filter", help="substring filter on names")
    p_cat.set_defaults(func=cmd_catalog)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        return args.func(args)
    except KsymError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    except Exception as exc:  # never abort on valid input; name the failure
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
