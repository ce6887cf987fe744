"""``verify``: cross-check a largest A-graded subideal against the brute-force oracle."""

import argparse
import sys

from monideal.commands.common import (
    add_common_arguments,
    add_grading_arguments,
    basic_report,
    emit_report,
    nonnegative_int,
    read_problem,
    select_grading,
    write_lines,
)
from monideal.errors import RingMismatchError
from monideal.ideals.grading import GradingMatrix
from monideal.poly.polynomial import format_polynomial
from monideal.tasks.agraded import compute_largest_agraded_subideal
from monideal.tasks.oracle import default_oracle_degree, verify_maximality


def run_verify(args: argparse.Namespace) -> int:
    problem = read_problem(args.input, args.order)
    ring = problem.ring
    ideal = problem.ideal()
    grading = select_grading(args, problem, default=GradingMatrix.identity(ring.nvars))
    degree = args.degree if args.degree is not None else default_oracle_degree(ring.nvars)

    if args.candidate is None:
        computed = compute_largest_agraded_subideal(ideal, grading, operation="verify_maximality")
        candidate, report = computed.ideal, computed.report
    else:
        other = read_problem(args.candidate, args.order)
        if other.ring != ring:
            raise RingMismatchError(f"candidate is over {other.ring}, the input over {ring}")
        candidate = other.ideal()
        report = basic_report("verify_maximality", problem)
        report.grading_shape = grading.shape

    verdict = verify_maximality(ideal, grading, candidate, degree)
    report.flags.append(f"verdict_{verdict.status.value}")
    if verdict.passed:
        write_lines(args.output, ["pass"])
        emit_report(args, report)
        return 0

    write_lines(args.output, ["fail", format_polynomial(verdict.witness)])
    sys.stderr.write(
        f"witness of A-degree {list(verdict.degree_class)} is missing from the {verdict.missing_from} "
        f"(checked up to degree {degree})\n"
    )
    emit_report(args, report)
    return 1


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "verify",
        help="certify maximality up to a degree bound (exit 1 with a witness on failure)",
        description="Compare the A-homogeneous pieces of I and of the computed (or given) subideal "
        "up to total degree D. Defaults to the identity grading.",
    )
    add_common_arguments(parser)
    add_grading_arguments(parser)
    parser.add_argument("--degree", type=nonnegative_int, default=None, metavar="D", help="truncation degree")
    parser.add_argument("--candidate", default=None, metavar="FILE", help="problem file holding the candidate ideal")
    parser.set_defaults(handler=run_verify)
