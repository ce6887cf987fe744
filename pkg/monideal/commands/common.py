"""Flags, input loading and output writing shared by every subcommand."""

import argparse
import sys
from pathlib import Path
from typing import Iterable, Optional

from monideal.config import settings
from monideal.errors import ProblemSyntaxError, UsageError
from monideal.ideals.grading import GradingMatrix
from monideal.ideals.groebner import Ideal
from monideal.parsers.problem import ProblemFile, parse_problem
from monideal.poly.orders import order_from_name
from monideal.poly.polynomial import format_polynomial
from monideal.schemas.report_schema import ComputationReport

STDIO = "-"


def add_common_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--input", default=STDIO, metavar="FILE", help="problem file ('-' reads standard input)")
    parser.add_argument(
        "--order",
        choices=("lex", "grevlex"),
        default=None,
        help=f"monomial order of the declared variables (default: {settings.DEFAULT_ORDER})",
    )
    parser.add_argument("--output", default=STDIO, metavar="FILE", help="result file ('-' writes standard output)")
    parser.add_argument("--report", action="store_true", help="write a JSON computation report to standard error")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="log progress (-vv for debug events)")


def add_grading_arguments(parser: argparse.ArgumentParser) -> None:
    """Grading selection; without a flag the problem file's ``grading`` block is used."""
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--identity", action="store_true", help="grade by the n x n identity matrix (fine grading)")
    group.add_argument("--zero", action="store_true", help="grade by the empty 0 x n matrix")
    group.add_argument("--total-degree", action="store_true", help="grade by the 1 x n all-ones matrix")


def nonnegative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative degree, got {value}")
    return value


def read_problem(path: str, order_name: Optional[str]) -> ProblemFile:
    """Parse a problem file; syntax errors are tagged with the file name."""
    text = sys.stdin.read() if path == STDIO else Path(path).read_text(encoding="utf-8")
    try:
        return parse_problem(text, order_from_name(order_name or settings.DEFAULT_ORDER))
    except ProblemSyntaxError as exc:
        exc.source = "<stdin>" if path == STDIO else path
        raise


def select_grading(
    args: argparse.Namespace, problem: ProblemFile, default: Optional[GradingMatrix] = None
) -> GradingMatrix:
    n = problem.ring.nvars
    if args.identity:
        return GradingMatrix.identity(n)
    if args.zero:
        return GradingMatrix.zero(n)
    if args.total_degree:
        return GradingMatrix.total_degree(n)
    if problem.grading is not None:
        return problem.grading
    if default is not None:
        return default
    raise UsageError("no grading: add a 'grading' block to the input or pass --identity, --zero or --total-degree")


def generator_lines(ideal: Ideal) -> list:
    """Canonical lines of a presented ideal; the zero ideal prints as ``0``."""
    return [format_polynomial(g) for g in ideal.generators] or ["0"]


def write_lines(path: str, lines: Iterable[str]) -> None:
    text = "".join(f"{line}\n" for line in lines)
    if path == STDIO:
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        Path(path).write_text(text, encoding="utf-8")


def emit_report(args: argparse.Namespace, report: ComputationReport) -> None:
    if args.report:
        sys.stderr.write(report.model_dump_json(indent=2) + "\n")


def basic_report(operation: str, problem: ProblemFile) -> ComputationReport:
    ring = problem.ring
    return ComputationReport(
        operation=operation,
        field=str(ring.field),
        variables=list(ring.variable_names),
        order=str(ring.order),
        input_generators=len(problem.polynomials),
    )
