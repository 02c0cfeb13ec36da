"""Command-line front end: compute, decompose, check, scan, export.

Exit codes: 0 success/agreement, 1 usage or parameter error, 2 mathematical
disagreement or identity failure.  Scan output is canonicalized after the
parallel phase, so it is byte-identical for any worker count.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from multiprocessing import Pool
from typing import Optional

from .conjecture import (
    CSV_HEADER,
    CheckReport,
    DiffSpec,
    ThresholdTable,
    check,
    f_poly,
    reduction_inequality_holds,
    reiner_stanton_correspondence,
    scan,
    twelve_cases,
    valid_bs,
)
from .koh import koh_decompose
from .poly import IntPoly
from .qbinom import default_cache, qbinomial

CACHE_ENV_VAR = "QBINOMDIFF_CACHE"

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DISAGREEMENT = 2


class _ArgumentParser(argparse.ArgumentParser):
    # usage problems exit 1; exit 2 is reserved for mathematical disagreements
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _threshold_override(text: str) -> tuple:
    try:
        k_text, m_text = text.split("=")
        return int(k_text), int(m_text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected K=M, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = _ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("text", "json", "csv"),
        default="text",
        help="output format (default: text)",
    )
    common.add_argument(
        "--cache",
        metavar="PATH",
        default=None,
        help=f"on-disk q-binomial cache file (default: ${CACHE_ENV_VAR} if set)",
    )
    common.add_argument(
        "--threshold",
        action="append",
        type=_threshold_override,
        default=[],
        metavar="K=M",
        help="override the minimal m at which the k>=5 prediction applies (repeatable)",
    )

    parser = _ArgumentParser(
        prog="qbinomdiff",
        description="Exact q-binomial coefficients, KOH decompositions, and "
        "unimodality checks of shifted q-binomial differences.",
    )
    sub = parser.add_subparsers(dest="command", metavar="command")

    p = sub.add_parser("qbinom", parents=[common], help="print [m choose k]_q")
    p.add_argument("m", type=int)
    p.add_argument("k", type=int)

    p = sub.add_parser("koh", parents=[common], help="KOH decomposition of [a+k choose k]_q")
    p.add_argument("a", type=int)
    p.add_argument("k", type=int)

    p = sub.add_parser("f", parents=[common], help="print the difference f(k,m,b)")
    p.add_argument("k", type=int)
    p.add_argument("m", type=int)
    p.add_argument("b", type=int)

    p = sub.add_parser("check", parents=[common], help="check one (k,m,b) against the prediction")
    p.add_argument("k", type=int)
    p.add_argument("m", type=int)
    p.add_argument("b", type=int)

    p = sub.add_parser("scan", parents=[common], help="check every admissible (m,b) in a range")
    p.add_argument("k", type=int)
    p.add_argument("m_lo", type=int)
    p.add_argument("m_hi", type=int)
    p.add_argument("--workers", type=_positive_int, default=1)
    p.add_argument("--only-disagreements", action="store_true")

    p = sub.add_parser("twelve", parents=[common], help="check the twelve top-of-ladder k=5 cases")
    p.add_argument("n", type=int)

    p = sub.add_parser("reduction", parents=[common], help="verify the ladder dominance inequality")
    p.add_argument("k", type=int)
    p.add_argument("--b-max", type=int, default=200)

    p = sub.add_parser("rs-scan", parents=[common], help="scan the Reiner-Stanton parameter slice")
    p.add_argument("k", type=int)
    p.add_argument("m_lo", type=int)
    p.add_argument("m_hi", type=int)

    return parser


def _poly_text(p: IntPoly) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for i, c in enumerate(p.coeffs):
        if c == 0:
            continue
        magnitude = abs(c)
        if i == 0:
            term = str(magnitude)
        else:
            base = "q" if i == 1 else f"q^{i}"
            term = base if magnitude == 1 else f"{magnitude}{base}"
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(f"+ {term}" if c > 0 else f"- {term}")
    return " ".join(parts)


def _bool_text(value: bool) -> str:
    return "true" if value else "false"


def _report_text(report: CheckReport) -> str:
    spec = report.spec
    return (
        f"f({spec.k},{spec.m},{spec.b}) shift={spec.shift_exponent}"
        f" nonnegative={_bool_text(report.nonnegative)}"
        f" unimodal={_bool_text(report.unimodal)}"
        f" predicted_exception={_bool_text(report.predicted_exception)}"
        f" reason={report.prediction_reason}"
        f" agrees={_bool_text(report.agrees_with_prediction)}"
    )


def _emit_reports(reports, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps([r.to_json_dict() for r in reports]))
    elif fmt == "csv":
        print(CSV_HEADER)
        for report in reports:
            print(report.to_csv_row())
    else:
        for report in reports:
            print(_report_text(report))


_worker_thresholds: Optional[ThresholdTable] = None


def _init_worker(threshold_map) -> None:
    global _worker_thresholds
    _worker_thresholds = ThresholdTable(threshold_map)


def _check_one(task) -> CheckReport:
    k, m, b = task
    return check(DiffSpec(k, m, b), _worker_thresholds)


def _parallel_scan(k, m_lo, m_hi, thresholds, workers) -> list:
    if workers <= 1:
        return scan(k, m_lo, m_hi, thresholds)
    tasks = [(k, m, b) for m in range(max(k, m_lo), m_hi + 1) for b in valid_bs(k, m)]
    chunk = max(1, len(tasks) // (workers * 8))
    with Pool(workers, initializer=_init_worker, initargs=(thresholds.as_dict(),)) as pool:
        reports = pool.map(_check_one, tasks, chunksize=chunk)
    reports.sort(key=lambda r: (r.spec.m, r.spec.b))
    return reports


def _cmd_qbinom(args, thresholds) -> int:
    p = qbinomial(args.m, args.k)
    if args.format == "json":
        print(json.dumps({"m": args.m, "k": args.k, "coeffs": p.to_decimal_strings()}))
    else:
        print(_poly_text(p))
    return EXIT_OK


def _cmd_koh(args, thresholds) -> int:
    if args.a < 0:
        raise ValueError("a must be nonnegative")
    terms = koh_decompose(args.a, args.k)
    total = IntPoly()
    for term in terms:
        total = total + term.poly
    expected = qbinomial(args.a + args.k, args.k)
    identity_holds = total == expected
    if args.format == "json":
        print(
            json.dumps(
                {
                    "a": args.a,
                    "k": args.k,
                    "terms": [term.to_json_dict() for term in terms],
                    "sum": total.to_decimal_strings(),
                    "identity": identity_holds,
                }
            )
        )
    else:
        for term in terms:
            factors = " ".join(f"({top},{bottom})" for top, bottom in term.factors)
            print(
                f"partition={term.partition} exponent={term.exponent}"
                f" factors={factors} poly={_poly_text(term.poly)}"
            )
        print(f"sum identity: {'PASS' if identity_holds else 'FAIL'}")
    return EXIT_OK if identity_holds else EXIT_DISAGREEMENT


def _cmd_f(args, thresholds) -> int:
    spec = DiffSpec(args.k, args.m, args.b)
    p = f_poly(spec)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "k": spec.k,
                    "m": spec.m,
                    "b": spec.b,
                    "shift_exponent": spec.shift_exponent,
                    "coeffs": p.to_decimal_strings(),
                }
            )
        )
    else:
        print(_poly_text(p))
    return EXIT_OK


def _cmd_check(args, thresholds) -> int:
    report = check(DiffSpec(args.k, args.m, args.b), thresholds)
    _emit_reports([report], args.format)
    return EXIT_OK if report.agrees_with_prediction else EXIT_DISAGREEMENT


def _cmd_scan(args, thresholds) -> int:
    if args.m_lo > args.m_hi:
        raise ValueError("m_lo must not exceed m_hi")
    reports = _parallel_scan(args.k, args.m_lo, args.m_hi, thresholds, args.workers)
    shown = (
        [r for r in reports if not r.agrees_with_prediction]
        if args.only_disagreements
        else reports
    )
    _emit_reports(shown, args.format)
    if all(r.agrees_with_prediction for r in reports):
        return EXIT_OK
    return EXIT_DISAGREEMENT


def _cmd_twelve(args, thresholds) -> int:
    reports = [check(spec, thresholds) for spec in twelve_cases(args.n)]
    _emit_reports(reports, args.format)
    return EXIT_OK if all(r.passes for r in reports) else EXIT_DISAGREEMENT


def _cmd_reduction(args, thresholds) -> int:
    if args.k < 4:
        raise ValueError("k must be at least 4")
    b_min = max(args.k - 2, 3 * args.k - 8)
    rows = [(args.k, b, reduction_inequality_holds(args.k, b)) for b in range(b_min, args.b_max + 1)]
    if args.format == "json":
        print(json.dumps([{"k": k, "b": b, "holds": holds} for k, b, holds in rows]))
    elif args.format == "csv":
        print("k,b,holds")
        for k, b, holds in rows:
            print(f"{k},{b},{_bool_text(holds)}")
    else:
        for k, b, holds in rows:
            print(f"k={k} b={b} holds={_bool_text(holds)}")
    return EXIT_OK if all(holds for _, _, holds in rows) else EXIT_DISAGREEMENT


def _cmd_rs_scan(args, thresholds) -> int:
    if args.m_lo > args.m_hi:
        raise ValueError("m_lo must not exceed m_hi")
    reports = []
    for m in range(max(args.k, args.m_lo), args.m_hi + 1):
        for spec in reiner_stanton_correspondence(args.k, m):
            reports.append(check(spec, thresholds))
    _emit_reports(reports, args.format)
    if all(r.agrees_with_prediction for r in reports):
        return EXIT_OK
    return EXIT_DISAGREEMENT


_HANDLERS = {
    "qbinom": _cmd_qbinom,
    "koh": _cmd_koh,
    "f": _cmd_f,
    "check": _cmd_check,
    "scan": _cmd_scan,
    "twelve": _cmd_twelve,
    "reduction": _cmd_reduction,
    "rs-scan": _cmd_rs_scan,
}

_POLY_COMMANDS = ("qbinom", "koh", "f")


def main(argv: Optional[list] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.error("a command is required")
    if args.format == "csv" and args.command in _POLY_COMMANDS:
        parser.error(f"--format csv is not supported for '{args.command}'")
    try:
        thresholds = ThresholdTable(dict(args.threshold))
    except ValueError as exc:
        parser.error(str(exc))
    cache_path = args.cache or os.environ.get(CACHE_ENV_VAR)
    if cache_path:
        default_cache().load(cache_path)
    try:
        code = _HANDLERS[args.command](args, thresholds)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if cache_path:
        try:
            default_cache().save(cache_path)
        except OSError as exc:
            print(f"warning: could not save cache {cache_path}: {exc}", file=sys.stderr)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
