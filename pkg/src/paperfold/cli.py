"""Command line interface.

Exit codes: 0 success, 1 verification or certification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys

from paperfold import abelian_oracle as oracle
from paperfold import verify
from paperfold.growth import a_of_i
from paperfold.regular_eval import (
    KernelQuery,
    LinearRepresentationError,
    build_linear_representation,
    kernel_terms,
    rho_linrep,
    rho_rec_many,
)
from paperfold.word_core import prefix, toeplitz_prefix

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _emit(lines) -> None:
    out = sys.stdout
    for line in lines:
        out.write(line + "\n")
    out.flush()


def _bool(flag: bool) -> str:
    return "true" if flag else "false"


def cmd_word(args) -> int:
    gen = prefix if args.method == "formula" else toeplitz_prefix
    word = gen(args.length)
    if args.format == "bits":
        _emit([str(word)])
    else:
        text = str(word)
        _emit(["n,f"] + [f"{i},{ch}" for i, ch in enumerate(text, start=1)])
    return EXIT_OK


def cmd_rho(args, parser) -> int:
    lo, hi = args.from_, args.to
    if not 1 <= lo <= hi:
        parser.error("need 1 <= --from <= --to")
    csv = args.format == "csv"
    if args.method == "oracle":
        if csv:
            _emit(["n,rho,method,certified"])
        for n in range(lo, hi + 1):
            try:
                rec = oracle.rho_oracle(n, args.prefix_cap)
            except oracle.CertificationError as exc:
                sys.stderr.write(f"certification failed at n={n}: {exc}\n")
                return EXIT_FAIL
            _emit([f"{n},{rec.rho},oracle,{_bool(rec.certified)}" if csv else str(rec.rho)])
        return EXIT_OK

    if args.method == "rec":
        values = [int(v) for v in rho_rec_many(range(lo, hi + 1))]
    else:
        rep = build_linear_representation()
        values = [rho_linrep(n, rep) for n in range(lo, hi + 1)]
    if csv:
        _emit(["n,rho,method"] + [f"{n},{v},{args.method}" for n, v in zip(range(lo, hi + 1), values)])
    else:
        _emit(str(v) for v in values)
    return EXIT_OK


def cmd_verify(args, parser) -> int:
    names = [c.strip() for c in args.checks.split(",") if c.strip()] if args.checks else list(verify.CHECKS)
    unknown = [c for c in names if c not in verify.CHECKS]
    if unknown:
        parser.error(f"unknown checks: {', '.join(unknown)}; choose from {', '.join(verify.CHECKS)}")
    if args.max_n < 1:
        parser.error("--max-n must be at least 1")
    report = verify.run_checks(names, args.max_n, parallel=args.parallel, cap=args.prefix_cap)
    _emit([report.render()])
    return EXIT_OK if report.overall else EXIT_FAIL


def cmd_kernel(args, parser) -> int:
    try:
        q = KernelQuery(args.e, args.c, args.count)
    except ValueError as exc:
        parser.error(str(exc))
    _emit(["k,index,rho"] + [f"{k},{i},{r}" for k, i, r in kernel_terms(q)])
    return EXIT_OK


def cmd_linrep(args, parser) -> int:
    try:
        rep = build_linear_representation()
    except LinearRepresentationError as exc:
        sys.stderr.write(f"{exc}\n")
        return EXIT_FAIL
    if args.action == "emit":
        _emit([rep.to_json()])
        return EXIT_OK
    if args.max_n < 1:
        parser.error("--max-n must be at least 1")
    result = verify.check_linrep(args.max_n)
    _emit([result.line()])
    return EXIT_OK if result.passed else EXIT_FAIL


def cmd_growth(args, parser) -> int:
    if args.max_i < 1:
        parser.error("--max-i must be at least 1")
    rows = ["i,a_scan,b_closed,match"]
    ok = True
    for i in range(1, args.max_i + 1):
        rec = a_of_i(i)
        ok &= rec.match
        a = "none" if rec.a_scan is None else str(rec.a_scan)
        rows.append(f"{i},{a},{rec.b_closed},{_bool(rec.match)}")
    _emit(rows)
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="paperfold",
        description="Abelian complexity of the ordinary paperfolding word.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("word", help="print a prefix of the paperfolding word")
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--method", choices=("formula", "toeplitz"), default="formula")
    p.add_argument("--format", choices=("bits", "csv"), default="bits")

    p = sub.add_parser("rho", help="abelian complexity over an index range")
    p.add_argument("--from", dest="from_", type=int, required=True)
    p.add_argument("--to", type=int, required=True)
    p.add_argument("--method", choices=("rec", "oracle", "linrep"), default="rec")
    p.add_argument("--format", choices=("csv", "plain"), default="csv")
    p.add_argument("--prefix-cap", type=int, default=oracle.DEFAULT_PREFIX_CAP)

    p = sub.add_parser("verify", help="run invariant suites")
    p.add_argument("--max-n", type=int, default=4096)
    p.add_argument("--checks", default="", help="comma-separated; default all: " + ",".join(verify.CHECKS))
    p.add_argument("--parallel", action="store_true")
    p.add_argument("--prefix-cap", type=int, default=oracle.DEFAULT_PREFIX_CAP)

    p = sub.add_parser("kernel", help="terms of a 2-kernel subsequence rho(2^e k + c)")
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--count", type=int, required=True)

    p = sub.add_parser("linrep", help="emit or check the linear representation")
    p.add_argument("action", choices=("emit", "check"))
    p.add_argument("--max-n", type=int, default=verify.LINREP_RANGE)

    p = sub.add_parser("growth", help="first occurrences A(i) against the closed form")
    p.add_argument("--max-i", type=int, required=True)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "word":
        if args.length < 0:
            parser.error("--length must be non-negative")
        return cmd_word(args)
    handler = {
        "rho": cmd_rho,
        "verify": cmd_verify,
        "kernel": cmd_kernel,
        "linrep": cmd_linrep,
        "growth": cmd_growth,
    }[args.command]
    return handler(args, parser)


if __name__ == "__main__":
    sys.exit(main())
