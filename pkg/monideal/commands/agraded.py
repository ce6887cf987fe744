"""``agraded`` and ``is-graded``: the general A-graded computations."""

import argparse

from monideal.commands.common import (
    add_common_arguments,
    add_grading_arguments,
    basic_report,
    emit_report,
    generator_lines,
    read_problem,
    select_grading,
    write_lines,
)
from monideal.logging_config import get_logger
from monideal.tasks.agraded import compute_largest_agraded_subideal, is_a_graded

logger = get_logger(__name__)


def run_agraded(args: argparse.Namespace) -> int:
    problem = read_problem(args.input, args.order)
    grading = select_grading(args, problem)
    result = compute_largest_agraded_subideal(problem.ideal(), grading)
    write_lines(args.output, generator_lines(result.ideal))
    emit_report(args, result.report)
    return 0


def run_is_graded(args: argparse.Namespace) -> int:
    problem = read_problem(args.input, args.order)
    grading = select_grading(args, problem)
    answer = is_a_graded(problem.ideal(), grading)
    logger.info("is_graded", grading_shape=list(grading.shape), answer=answer)
    write_lines(args.output, ["true" if answer else "false"])
    report = basic_report("is_a_graded", problem)
    report.grading_shape = grading.shape
    emit_report(args, report)
    return 0


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "agraded",
        help="largest A-graded ideal contained in I",
        description="Print the reduced Groebner basis of the largest A-graded subideal, one polynomial per line.",
    )
    add_common_arguments(parser)
    add_grading_arguments(parser)
    parser.set_defaults(handler=run_agraded)

    parser = subparsers.add_parser("is-graded", help="test whether I is A-graded (prints true/false)")
    add_common_arguments(parser)
    add_grading_arguments(parser)
    parser.set_defaults(handler=run_is_graded)
