"""
Command line interface of zetakit.

Subcommands::

    zetakit eval <fn> <s> [--format exact|float|both] [--digits N] [--json]
    zetakit sum --poly "<expr>" --from <a> --to <b|inf> [--json]
    zetakit table <fn> --from <s0> --to <s1> [--json]
    zetakit verify --suite <name> [--tol T] [--max-terms N] [--json]
    zetakit order cmp <a> <b>

Exit codes: 0 success, 1 verification failure, 2 usage or parse error, 3 unsupported value.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence

from rich.console import Console
from rich.logging import RichHandler
from rich.table import Table
from rich.traceback import install as install_rich_traceback

from zetakit import numverify, order, regsum, values
from zetakit.numverify import NumericConfig, SuiteName, VerificationReport
from zetakit.polyparse import format_poly, parse_polynomial
from zetakit.shared_types import FunctionId, PolySyntaxError, Unsupported, ZetaKitError
from zetakit.values import PiValue

# Global module logger
logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
EXIT_UNSUPPORTED = 3

MAX_FLOAT_DIGITS = 15

console = Console(highlight=False)
error_console = Console(stderr=True, highlight=False)


@dataclass
class OutputRecord:
    """
    Structured result of one evaluation, shared by the text and JSON renderers.

    ``exact`` is present iff ``status == "ok"``.
    """
    operation: str
    arguments: Dict[str, Any]
    status: str = "ok"
    exact: Optional[PiValue] = None
    float_text: Optional[str] = None
    reason: Optional[str] = None
    detail: Optional[str] = None

    @classmethod
    def unsupported(cls, operation: str, arguments: Dict[str, Any], u: Unsupported) -> OutputRecord:
        return cls(operation, arguments, status="unsupported", reason=u.reason.value, detail=u.detail)

    def to_dict(self) -> Dict[str, Any]:
        exact = None
        if self.exact is not None:
            exact = {
                "text": self.exact.to_text(),
                "terms": [{"pi_power": m, "coeff": str(q)} for m, q in self.exact],
            }
        return {
            "operation": self.operation,
            "arguments": self.arguments,
            "status": self.status,
            "exact": exact,
            "float": self.float_text,
            "reason": self.reason,
            "detail": self.detail,
        }

    def to_text(self, fmt: str = "exact") -> str:
        if self.status != "ok":
            return f"unsupported: {self.reason} ({self.detail})"
        if fmt == "float":
            return self.float_text or ""
        if fmt == "both":
            return f"{self.exact.to_text()} ≈ {self.float_text}"
        return self.exact.to_text()


def setup_logging(verbosity: int = 0) -> None:
    """
    Configures rich logging on stderr. ``verbosity`` 0 shows warnings, 1 info, 2 and more debug.
    """
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logging.basicConfig(
        level=level,
        format="%(name)-22s | %(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=error_console, rich_tracebacks=True)],
        force=True,
    )
    install_rich_traceback()


def _float_text(v: PiValue, digits: int) -> str:
    return f"{numverify.to_float(v):.{digits}g}"


def cmd_eval(fn: FunctionId, s: int, digits: int = MAX_FLOAT_DIGITS) -> OutputRecord:
    """Evaluates ``fn(s)`` exactly and as float."""
    arguments = {"fn": fn.value, "s": s}
    result = values.evaluate(fn, s)
    if isinstance(result, Unsupported):
        return OutputRecord.unsupported("eval", arguments, result)
    return OutputRecord("eval", arguments, exact=result, float_text=_float_text(result, digits))


def cmd_sum(expr: str, a: int, b: Optional[int], digits: int = MAX_FLOAT_DIGITS) -> OutputRecord:
    """
    Sums the polynomial ``expr`` over ``Z_{a,b}`` or, if ``b`` is None, from ``a`` to
    infinity. Both give method values, so wrapped and divergent sums are allowed.

    Raises:
        PolySyntaxError: If ``expr`` does not parse.
    """
    poly = parse_polynomial(expr)
    rf = regsum.RegularFunction.from_polynomial(poly)
    if b is None:
        total = regsum.sum_to_infinity(rf, a)
    else:
        total = regsum.finite_sum(rf, a, b)
    exact = PiValue.rational(total.value)
    arguments = {"poly": format_poly(poly), "from": a, "to": "inf" if b is None else b}
    return OutputRecord("sum", arguments, exact=exact, float_text=_float_text(exact, digits))


def cmd_table(fn: FunctionId, start: int, stop: int, digits: int = MAX_FLOAT_DIGITS) -> List[OutputRecord]:
    """One :func:`cmd_eval` record for each integer s from ``start`` to ``stop``."""
    step = 1 if stop >= start else -1
    return [cmd_eval(fn, s, digits) for s in range(start, stop + step, step)]


def cmd_verify(suite: str, cfg: NumericConfig) -> tuple[List[VerificationReport], int]:
    """Runs a verification suite and returns the reports with the exit code."""
    reports = numverify.run_suite(suite, cfg)
    code = EXIT_OK if all(r.passed for r in reports) else EXIT_VERIFICATION_FAILED
    return reports, code


def cmd_order_cmp(a: int, b: int) -> str:
    """
    Compares two integers in the order ``0, 1, 2, ..., -2, -1``.

    Example:
        >>> cmd_order_cmp(7, -5)
        '7 ≺ -5'
    """
    c = order.compare(a, b)
    if c == 0:
        return f"{a} = {b}"
    if c < 0:
        return f"{a} ≺ {b}"
    return f"{b} ≺ {a}"


def _digits(text: str) -> int:
    value = int(text)
    if not 1 <= value <= MAX_FLOAT_DIGITS:
        raise argparse.ArgumentTypeError(f"digits must be in 1..{MAX_FLOAT_DIGITS}")
    return value


def _upper_bound(text: str) -> Optional[int]:
    if text == "inf":
        return None
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or 'inf', got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zetakit",
        description="Exact values of zeta, eta, lambda and beta at integers, and method sums over the reordered integers.",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="more log output (-vv for debug)")
    sub = parser.add_subparsers(dest="command", required=True)
    fn_choices = [f.value for f in FunctionId]

    p_eval = sub.add_parser("eval", help="evaluate a function at an integer")
    p_eval.add_argument("fn", choices=fn_choices)
    p_eval.add_argument("s", type=int)
    p_eval.add_argument("--format", choices=("exact", "float", "both"), default="exact")
    p_eval.add_argument("--digits", type=_digits, default=MAX_FLOAT_DIGITS)
    p_eval.add_argument("--json", action="store_true")

    p_sum = sub.add_parser("sum", help="sum a polynomial in u over the segment from a to b")
    p_sum.add_argument("--poly", required=True, help="polynomial in u, e.g. \"u^2 + 1/2\"; use --poly=-u for a leading minus")
    p_sum.add_argument("--from", dest="start", type=int, required=True)
    p_sum.add_argument("--to", dest="stop", type=_upper_bound, required=True)
    p_sum.add_argument("--format", choices=("exact", "float", "both"), default="exact")
    p_sum.add_argument("--digits", type=_digits, default=MAX_FLOAT_DIGITS)
    p_sum.add_argument("--json", action="store_true")

    p_table = sub.add_parser("table", help="tabulate a function over a range of integers")
    p_table.add_argument("fn", choices=fn_choices)
    p_table.add_argument("--from", dest="start", type=int, required=True)
    p_table.add_argument("--to", dest="stop", type=int, required=True)
    p_table.add_argument("--digits", type=_digits, default=MAX_FLOAT_DIGITS)
    p_table.add_argument("--json", action="store_true")

    p_verify = sub.add_parser("verify", help="run a numeric verification suite")
    p_verify.add_argument("--suite", choices=[s.value for s in SuiteName], default=SuiteName.ALL.value)
    p_verify.add_argument("--tol", type=float)
    p_verify.add_argument("--max-terms", type=int)
    p_verify.add_argument("--json", action="store_true")

    p_order = sub.add_parser("order", help="the reordered integer line")
    order_sub = p_order.add_subparsers(dest="order_command", required=True)
    p_cmp = order_sub.add_parser("cmp", help="compare two integers")
    p_cmp.add_argument("a", type=int)
    p_cmp.add_argument("b", type=int)
    return parser


def _print_json(payload: Any) -> None:
    console.out(json.dumps(payload, ensure_ascii=False, indent=2))


def _run_eval(args: argparse.Namespace) -> int:
    record = cmd_eval(FunctionId(args.fn), args.s, args.digits)
    if args.json:
        _print_json(record.to_dict())
    else:
        console.out(record.to_text(args.format))
    return EXIT_OK if record.status == "ok" else EXIT_UNSUPPORTED


def _run_sum(args: argparse.Namespace) -> int:
    record = cmd_sum(args.poly, args.start, args.stop, args.digits)
    if args.json:
        _print_json(record.to_dict())
    else:
        console.out(record.to_text(args.format))
    return EXIT_OK


def _run_table(args: argparse.Namespace) -> int:
    records = cmd_table(FunctionId(args.fn), args.start, args.stop, args.digits)
    if args.json:
        _print_json([r.to_dict() for r in records])
        return EXIT_OK
    fn = FunctionId(args.fn)
    table = Table(title=f"{fn.symbol}(s)")
    table.add_column("s", justify="right")
    table.add_column("exact")
    table.add_column("float", justify="right")
    for r in records:
        if r.status == "ok":
            table.add_row(str(r.arguments["s"]), r.exact.to_text(), r.float_text)
        else:
            table.add_row(str(r.arguments["s"]), f"{r.reason}", r.detail or "")
    console.print(table)
    return EXIT_OK


def _run_verify(args: argparse.Namespace) -> int:
    cfg = NumericConfig().with_overrides(tolerance=args.tol, max_terms=args.max_terms)
    reports, code = cmd_verify(args.suite, cfg)
    if args.json:
        _print_json([r.to_dict() for r in reports])
        return code
    table = Table(title=f"suite {args.suite}")
    table.add_column("name")
    table.add_column("deviation", justify="right")
    table.add_column("tolerance", justify="right")
    table.add_column("terms", justify="right")
    table.add_column("result")
    for r in reports:
        table.add_row(r.name, f"{r.deviation:.3e}", f"{r.tolerance:.1e}", str(r.terms_used),
                      "[green]pass[/green]" if r.passed else "[red]FAIL[/red]")
    console.print(table)
    failed = sum(1 for r in reports if not r.passed)
    console.out(f"{len(reports)} reports, {failed} failed")
    return code


def _run_order(args: argparse.Namespace) -> int:
    console.out(cmd_order_cmp(args.a, args.b))
    return EXIT_OK


_HANDLERS = {
    "eval": _run_eval,
    "sum": _run_sum,
    "table": _run_table,
    "verify": _run_verify,
    "order": _run_order,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Entry point of the ``zetakit`` console script.

    Returns:
        int: The process exit code.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    setup_logging(args.verbose)
    logger.debug("arguments: %s", vars(args))

    try:
        return _HANDLERS[args.command](args)
    except PolySyntaxError as e:
        error_console.print(str(e), style="red", markup=False, soft_wrap=True)
        return EXIT_USAGE
    except ZetaKitError as e:
        logger.error("%s", e)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
