"""``monomials`` and ``has-monomial``: the identity-grading questions."""

import argparse

from monideal.commands.common import (
    add_common_arguments,
    basic_report,
    emit_report,
    generator_lines,
    nonnegative_int,
    read_problem,
    write_lines,
)
from monideal.poly.polynomial import format_monomial
from monideal.tasks.agraded import compute_largest_monomial_subideal, contains_monomial, monomials_up_to


def run_monomials(args: argparse.Namespace) -> int:
    problem = read_problem(args.input, args.order)
    ideal = problem.ideal()
    if args.up_to is None:
        result = compute_largest_monomial_subideal(ideal)
        write_lines(args.output, generator_lines(result.ideal))
        emit_report(args, result.report)
        return 0

    ring = problem.ring
    found = sorted(monomials_up_to(ideal, args.up_to), key=ring.order.key)
    write_lines(args.output, [format_monomial(ring.variable_names, b) for b in found])
    report = basic_report("monomials_up_to", problem)
    report.output_generators = len(found)
    emit_report(args, report)
    return 0


def run_has_monomial(args: argparse.Namespace) -> int:
    problem = read_problem(args.input, args.order)
    answer = contains_monomial(problem.ideal())
    write_lines(args.output, ["true" if answer else "false"])
    emit_report(args, basic_report("contains_monomial", problem))
    return 0


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "monomials",
        help="largest monomial ideal contained in I",
        description="Print the minimal monomial generators of the monomials in I, or with --up-to "
        "every monomial of I up to a total degree.",
    )
    add_common_arguments(parser)
    parser.add_argument("--up-to", type=nonnegative_int, default=None, metavar="D", help="list monomials of degree <= D")
    parser.set_defaults(handler=run_monomials)

    parser = subparsers.add_parser("has-monomial", help="test whether I contains a monomial (prints true/false)")
    add_common_arguments(parser)
    parser.set_defaults(handler=run_has_monomial)
