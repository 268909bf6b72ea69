"""Command-line entry point: ``divsum eval | table | verify``.

Exit codes: 0 all checks pass, 1 a check failed, 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from divsum.boson import diagonal_part, expectation_poly, normal_order_power
from divsum.classical import (
    SERIES,
    VerificationReport,
    abel_limit_exact,
    abel_numeric,
    abel_terms_needed,
    cesaro_numeric,
    euler_exact_poly,
)
from divsum.exact import format_decimal, format_rational, parse_rational
from divsum.fockcheck import MomentQuery, regulated_moment_sum, regulated_vanishing_sum
from divsum.npoly import NPoly
from divsum.resum import (
    DEFAULT_CAP,
    alt_poly_sum,
    alt_power_sum,
    diagonal_operator,
    eta_oracle,
)

CSV_FIELDS = ("p", "wigner", "abel", "euler", "eta", "agree", "float")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse exits with 2 already; keep stderr only
        raise UsageError(message)


@dataclass(frozen=True)
class OutputRecord:
    p: int
    wigner: str
    abel: str
    euler: str
    eta: str
    agree: bool
    float_value: str

    def as_dict(self) -> dict:
        return {
            "p": self.p,
            "wigner": self.wigner,
            "abel": self.abel,
            "euler": self.euler,
            "eta": self.eta,
            "agree": self.agree,
            "float": self.float_value,
        }

    @classmethod
    def from_dict(cls, row: dict) -> OutputRecord:
        agree = row["agree"]
        if isinstance(agree, str):
            agree = agree == "true"
        return cls(
            p=int(row["p"]),
            wigner=row["wigner"],
            abel=row["abel"],
            euler=row["euler"],
            eta=row["eta"],
            agree=bool(agree),
            float_value=row["float"],
        )


def table_record(p: int) -> OutputRecord:
    mono = NPoly.monomial(p)
    values = (
        alt_power_sum(p).value,
        abel_limit_exact(mono).value,
        euler_exact_poly(mono).value,
        eta_oracle(p).value,
    )
    w, a, e, t = (format_rational(v) for v in values)
    return OutputRecord(p, w, a, e, t, len(set(values)) == 1, format_decimal(values[0]))


def render_table(records: Sequence[OutputRecord], fmt: str) -> str:
    if fmt == "json":
        return json.dumps([r.as_dict() for r in records], indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_FIELDS)
        for r in records:
            d = r.as_dict()
            d["agree"] = "true" if r.agree else "false"
            writer.writerow([d[k] for k in CSV_FIELDS])
        return buf.getvalue()
    rows = [list(CSV_FIELDS)] + [
        [str(r.p), r.wigner, r.abel, r.euler, r.eta, "true" if r.agree else "false", r.float_value]
        for r in records
    ]
    widths = [max(len(row[i]) for row in rows) for i in range(len(CSV_FIELDS))]
    return "".join(
        "  ".join(cell.rjust(w) for cell, w in zip(row, widths)).rstrip() + "\n" for row in rows
    )


def parse_table(text: str, fmt: str) -> list[OutputRecord]:
    if fmt == "json":
        return [OutputRecord.from_dict(row) for row in json.loads(text)]
    if fmt == "csv":
        return [OutputRecord.from_dict(row) for row in csv.DictReader(io.StringIO(text))]
    raise ValueError(f"cannot parse format {fmt!r}")


def format_report(r: VerificationReport) -> str:
    params = " ".join(
        f"{k}={format_decimal(v) if isinstance(v, float) else v}" for k, v in r.parameters.items()
    )
    return (
        f"{'PASS' if r.passed else 'FAIL'} {r.method} {params} "
        f"target={format_decimal(float(r.target))} computed={format_decimal(float(r.computed))} "
        f"tol={format_decimal(float(r.tolerance))}"
    )


def _write(payload: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(payload)
        return
    try:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(payload)
    except OSError as exc:
        raise UsageError(f"cannot write {out}: {exc}") from exc


def cmd_eval(args: argparse.Namespace) -> int:
    if args.power is not None:
        if args.power < 0 or args.power > args.cap:
            raise UsageError(f"--power must lie in [0, {args.cap}]")
        value = alt_power_sum(args.power).value
    else:
        try:
            coeffs = [parse_rational(c) for c in args.poly.split(",")]
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        poly = NPoly.from_coeffs(coeffs)
        if poly.degree > args.cap:
            raise UsageError(f"--poly degree exceeds cap {args.cap}")
        value = alt_poly_sum(poly).value
    print(f"{format_rational(value)} ({format_decimal(value)})")
    return 0


def cmd_table(args: argparse.Namespace) -> int:
    if args.max_p < 0 or args.max_p > args.cap:
        raise UsageError(f"--max-p must lie in [0, {args.cap}]")
    records = [table_record(p) for p in range(args.max_p + 1)]
    _write(render_table(records, args.format), args.out)
    return 0 if all(r.agree for r in records) else 1


def _verify_ordering(max_s: int) -> list[VerificationReport]:
    if max_s < 1:
        raise UsageError("--max-s must be >= 1")
    reports = []
    for s in range(1, max_s + 1):
        brute = diagonal_operator(s, "commutator")
        closed = diagonal_operator(s, "weyl")
        mismatch = sum(
            abs(brute.terms.get(t, 0) - closed.terms.get(t, 0))
            for t in set(brute.terms) | set(closed.terms)
        )
        reports.append(
            VerificationReport("weyl-diagonal", {"s": s}, 0.0, float(mismatch), 0.0)
        )
        for path, op in (("commutator", brute), ("weyl", closed)):
            value = alt_poly_sum(expectation_poly(op)).value
            reports.append(
                VerificationReport("vanishing", {"s": s, "path": path}, 0.0, float(value), 0.0)
            )
    for m in range(1, 2 * max_s + 2, 2):
        diag = diagonal_part(normal_order_power(m))
        reports.append(
            VerificationReport("odd-diagonal", {"m": m}, 0.0, float(len(diag.terms)), 0.0)
        )
    return reports


def _verify_fock(args: argparse.Namespace) -> list[VerificationReport]:
    reports = []
    s, k = args.s, args.k
    if s is None and k is None:
        s = 1
    if not 0 < args.x < 1:
        raise UsageError("--x must lie in (0, 1)")
    try:
        if s is not None:
            trunc = args.trunc or 2 * s + abel_terms_needed(args.x, s, args.tol)
            reports.append(regulated_vanishing_sum(s, trunc, args.x, args.tol))
        if k is not None:
            q = float(parse_rational(args.q)) if "/" in args.q else float(args.q)
            trunc = args.trunc or k + abel_terms_needed(args.x, k // 2, args.tol)
            reports.append(regulated_moment_sum(MomentQuery(k, q, args.x, trunc), args.tol))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return reports


def _verify_classical(args: argparse.Namespace) -> list[VerificationReport]:
    if args.series not in SERIES:
        raise UsageError(f"unknown series {args.series!r}; choose from {', '.join(SERIES)}")
    stream, target = SERIES[args.series]
    if args.method == "cesaro":
        if args.order < 1 or args.terms < 1:
            raise UsageError("--order and --terms must be >= 1")
        computed = cesaro_numeric(stream, args.order, args.terms)
        params = {"series": args.series, "order": args.order, "terms": args.terms}
    else:
        if not 0 < args.x < 1:
            raise UsageError("--x must lie in (0, 1)")
        terms = args.terms or abel_terms_needed(args.x, stream.growth, args.tol)
        computed = abel_numeric(stream, args.x, terms)
        params = {"series": args.series, "x": args.x, "terms": terms}
    return [VerificationReport(args.method, params, float(target), computed, args.tol)]


def cmd_verify(args: argparse.Namespace) -> int:
    if args.target == "ordering":
        reports = _verify_ordering(args.max_s)
    elif args.target == "fock":
        reports = _verify_fock(args)
    else:
        reports = _verify_classical(args)
    for r in reports:
        print(format_report(r))
    return 0 if all(r.passed for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="divsum", description="Regularized alternating sums in exact arithmetic.")
    parser.add_argument("--cap", type=int, default=DEFAULT_CAP, help="largest allowed power")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    ev = sub.add_parser("eval", help="regularized sum of (-1)^n P(n)")
    group = ev.add_mutually_exclusive_group(required=True)
    group.add_argument("--power", type=int, help="P(n) = n^p")
    group.add_argument("--poly", help='coefficients "c0,c1,..." lowest degree first')
    ev.set_defaults(func=cmd_eval)

    tb = sub.add_parser("table", help="compare all exact methods for p = 0..P")
    tb.add_argument("--max-p", type=int, required=True)
    tb.add_argument("--format", choices=("text", "csv", "json"), default="text")
    tb.add_argument("--out")
    tb.set_defaults(func=cmd_table)

    vf = sub.add_parser("verify", help="run verification checks")
    vsub = vf.add_subparsers(dest="target", required=True, parser_class=_Parser)

    fock = vsub.add_parser("fock", help="truncated Fock-space witnesses")
    fock.add_argument("--s", type=int)
    fock.add_argument("--k", type=int)
    fock.add_argument("--q", default="0")
    fock.add_argument("--x", type=float, default=0.999)
    fock.add_argument("--trunc", type=int, help="Fock cutoff N (default: sized from the x^N tail)")
    fock.add_argument("--tol", type=float, default=0.1)

    cl = vsub.add_parser("classical", help="numeric Abel / Cesaro summation")
    cl.add_argument("--series", default="alternating-ones")
    cl.add_argument("--method", choices=("abel", "cesaro"), default="cesaro")
    cl.add_argument("--order", type=int, default=1)
    cl.add_argument("--terms", type=int)
    cl.add_argument("--x", type=float, default=0.9999)
    cl.add_argument("--tol", type=float, default=1e-4)

    od = vsub.add_parser("ordering", help="Weyl/normal ordering diagonal checks")
    od.add_argument("--max-s", type=int, default=6)
    vf.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "verify" and args.target == "classical" and args.method == "cesaro":
            args.terms = args.terms or 100_000
        return args.func(args)
    except UsageError as exc:
        print(f"divsum: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
