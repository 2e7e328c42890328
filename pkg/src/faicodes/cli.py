"""Command-line front end: per-function analysis, code export, PAI certificates, sweeps.

Exit codes: 0 on success, 1 when a property sweep finds a violation, 2 on
usage or input errors.  Reports are deterministic for a fixed seed; wall
clock goes to stderr only.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import IO

from .boolfun import BooleanFunction, parse_function
from .codes import export_code, hull_dim, import_code, is_even_like, is_lcd, is_self_orthogonal, puncture, rm
from .gf2m import FieldGF2n, field_new, field_with_modulus
from .immunity import function_report
from .pai_lcd import (
    carlet_feng_support,
    function_from_columns,
    pai_certificate,
    support_columns,
)
from .sweeps import SUITES, SweepReport


class SystemExit2(Exception):
    """Usage-level error: reported and mapped to exit code 2."""


def _open_out(path: str | None) -> IO[str]:
    return open(path, "w") if path else sys.stdout


def _field_for(n: int, modulus_hex: str | None) -> FieldGF2n:
    if modulus_hex is None:
        return field_new(n)
    return field_with_modulus(n, int(modulus_hex, 16))


def _emit(out: IO[str], record: dict, as_json: bool) -> None:
    if as_json:
        out.write(json.dumps(record, sort_keys=True) + "\n")
        return
    for key, value in record.items():
        out.write(f"{key}: {value}\n")


def cmd_analyze(args: argparse.Namespace) -> int:
    f = parse_function(args.function)
    if f.tt == 0:
        raise SystemExit2("FAI is undefined for the zero function")
    record = function_report(f)
    out = _open_out(args.out)
    try:
        _emit(out, record, args.json)
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


def cmd_rm(args: argparse.Namespace) -> int:
    if not 0 <= args.d <= args.n <= 12:
        raise SystemExit2(f"need 0 <= d <= n <= 12, got d={args.d} n={args.n}")
    field = _field_for(args.n, args.modulus)
    code = rm(args.d, args.n, field)
    if args.punctured_by is not None:
        f = parse_function(args.punctured_by)
        if f.n != args.n:
            raise SystemExit2("--punctured-by function has a different variable count")
        sc = support_columns(f, field)
        code = puncture(code, sc.complement())
    out = _open_out(args.out)
    try:
        out.write(f"# modulus {field.modulus:#x}\n")
        out.write(export_code(code))
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


def cmd_lcd_check(args: argparse.Namespace) -> int:
    with open(args.matrix) as fh:
        code = import_code(fh.read())
    record = {
        "length": code.length,
        "dim": code.dim,
        "hull": hull_dim(code),
        "lcd": is_lcd(code),
        "self_orthogonal": is_self_orthogonal(code),
        "even_like": is_even_like(code),
    }
    out = _open_out(args.out)
    try:
        _emit(out, record, args.json)
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


def cmd_pai_verify(args: argparse.Namespace) -> int:
    out = _open_out(args.out)
    status = 0
    try:
        if args.search is not None:
            n = args.search
            if n > 4:
                raise SystemExit2("exhaustive search supports n <= 4; use carlet-feng for n = 5")
            field = _field_for(n, args.modulus)
            found = 0
            for tt in range(1, 1 << (1 << n)):
                f = BooleanFunction(n, tt)
                cert = pai_certificate(f, field)
                if cert["pai_by_def"]:
                    found += 1
                    _emit(out, cert, args.json)
            if not args.json:
                out.write(f"# {found} PAI functions at n={n}\n")
        else:
            f = parse_function(args.function)
            if f.tt == 0:
                raise SystemExit2("FAI is undefined for the zero function")
            field = _field_for(f.n, args.modulus)
            cert = pai_certificate(f, field)
            _emit(out, cert, args.json)
            if not cert["agree"]:
                status = 1
    finally:
        if out is not sys.stdout:
            out.close()
    return status


def cmd_carlet_feng(args: argparse.Namespace) -> int:
    field = _field_for(args.n, args.modulus)
    offsets = range((1 << args.n) - 1) if args.all_offsets else [args.offset]
    out = _open_out(args.out)
    status = 0
    try:
        for off in offsets:
            sc = carlet_feng_support(args.n, off, args.count, field)
            f = function_from_columns(sc, field)
            cert = pai_certificate(f, field)
            cert["offset"] = off
            cert["columns"] = sorted(sc.cols)
            _emit(out, cert, args.json)
            if not cert["pai_by_def"]:
                status = 1
    finally:
        if out is not sys.stdout:
            out.close()
    return status


def cmd_sweep(args: argparse.Namespace) -> int:
    if args.suite not in SUITES:
        raise SystemExit2(f"unknown suite {args.suite!r}; choose from {', '.join(sorted(SUITES))}")
    t0 = time.time()
    report: SweepReport = SUITES[args.suite](args.n, args.trials, args.seed)
    out = _open_out(args.out)
    try:
        if args.json:
            record = {
                "suite": report.suite,
                "n": report.n,
                "trials": report.trials,
                "seed": report.seed,
                "checks": report.checks,
                "failures": report.failures,
                "notes": report.notes,
            }
            out.write(json.dumps(record, sort_keys=True) + "\n")
        else:
            out.write(f"suite {report.suite} n={report.n} trials={report.trials} seed={report.seed}\n")
            for note in report.notes:
                out.write(f"note: {note}\n")
            for failure in report.failures:
                out.write(f"FAIL {failure}\n")
            out.write(f"checks: {report.checks}  failures: {len(report.failures)}\n")
    finally:
        if out is not sys.stdout:
            out.close()
    print(f"elapsed: {time.time() - t0:.2f}s", file=sys.stderr)
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="faicodes",
        description="Algebraic immunity, fast-immunity profiles and LCD codes "
        "from punctured Reed-Muller codes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--json", action="store_true", help="one JSON record per line")
        p.add_argument("--out", help="write the report to a file")
        p.add_argument("--modulus", help="hex primitive polynomial overriding the default")

    p = sub.add_parser("analyze", help="immunity report for one function")
    p.add_argument("function", help="function spec: n:HEX or n:{i1,i2,...}")
    common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("rm", help="emit a (punctured) Reed-Muller generator matrix")
    p.add_argument("d", type=int, help="order")
    p.add_argument("n", type=int, help="variables")
    p.add_argument("--punctured-by", help="restrict columns to this function's support")
    common(p)
    p.set_defaults(func=cmd_rm)

    p = sub.add_parser("lcd-check", help="hull/LCD report for a generator matrix file")
    p.add_argument("matrix", help="matrix file in the text format")
    common(p)
    p.set_defaults(func=cmd_lcd_check)

    p = sub.add_parser("pai-verify", help="PAI certificate for a function or a full search")
    p.add_argument("function", nargs="?", help="function spec")
    p.add_argument("--search", type=int, help="exhaustive search over all functions of n variables")
    common(p)
    p.set_defaults(func=cmd_pai_verify)

    p = sub.add_parser("carlet-feng", help="consecutive-power support candidates and verdicts")
    p.add_argument("n", type=int)
    p.add_argument("--offset", type=int, default=0, help="first exponent of alpha")
    p.add_argument("--count", type=int, help="number of consecutive powers (default 2^(n-1))")
    p.add_argument("--all-offsets", action="store_true")
    common(p)
    p.set_defaults(func=cmd_carlet_feng)

    p = sub.add_parser("sweep", help="run a property sweep suite")
    p.add_argument("suite", help=f"one of: {', '.join(sorted(SUITES))}")
    p.add_argument("n", type=int)
    p.add_argument("trials", type=int, nargs="?", default=1000)
    p.add_argument("--seed", type=int, default=0)
    common(p)
    p.set_defaults(func=cmd_sweep)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "pai-verify" and args.function is None and args.search is None:
        parser.error("pai-verify needs a function spec or --search")
    try:
        return args.func(args)
    except SystemExit2 as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
