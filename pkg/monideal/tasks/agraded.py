"""Largest A-graded subideals and the monomial questions built on them.

For a d x n integer matrix A, the largest A-graded ideal inside I is
(t.I) : (t_1...t_d)^infinity intersected with k[x], where t.I replaces each
x_i by t^(a_i) x_i. With A the identity this is the ideal generated by all
monomials of I. The pipeline is:

    substitute_grading -> saturate by t_1...t_d -> eliminate t -> reduced basis

Geometrically the result cuts out the smallest torus-stable subscheme
containing the zero scheme of I; nothing geometric is computed here.
"""

import time
from contextlib import contextmanager
from dataclasses import dataclass
from typing import FrozenSet, Iterator, List

from monideal.errors import DimensionMismatchError
from monideal.ideals.grading import GradingMatrix
from monideal.ideals.groebner import Ideal, is_unit_ideal
from monideal.ideals.operations import ExtendedRing, saturate, substitute_grading, torus_contraction
from monideal.logging_config import get_logger
from monideal.poly.monomial import ExponentVector, monomial_divides, monomials_up_to_degree
from monideal.poly.polynomial import Polynomial
from monideal.poly.ring import RingContext
from monideal.schemas.report_schema import ComputationReport, StageReport

logger = get_logger(__name__)


@dataclass(frozen=True)
class AGradedResult:
    """The answer (presented by its reduced basis) and how it was obtained."""

    ideal: Ideal
    report: ComputationReport


class _StageRecorder:
    def __init__(self, report: ComputationReport):
        self.report = report

    @contextmanager
    def stage(self, name: str, ring: RingContext) -> Iterator[List[int]]:
        """Time a stage; the body appends the basis size it produced to the yielded list."""
        sizes: List[int] = []
        started = time.perf_counter()
        yield sizes
        elapsed_ms = (time.perf_counter() - started) * 1000.0
        stage = StageReport(
            name=name,
            variables=list(ring.variable_names),
            order=str(ring.order),
            basis_size=sizes[-1] if sizes else 0,
            elapsed_ms=round(elapsed_ms, 3),
        )
        self.report.stages.append(stage)
        logger.info("pipeline_stage", operation=self.report.operation, **stage.model_dump())


def _presented(ideal: Ideal) -> Ideal:
    """The same ideal with its reduced basis as generator list."""
    gb = ideal.groebner_basis()
    return Ideal(ideal.ring, gb, reduced_groebner_basis=gb)


def _check_grading(ideal: Ideal, grading: GradingMatrix) -> None:
    if grading.n != ideal.ring.nvars:
        raise DimensionMismatchError(
            f"a {grading.d}x{grading.n} grading does not match {ideal.ring.nvars} variables"
        )


def is_homogeneous(f: Polynomial, grading: GradingMatrix) -> bool:
    """All terms of ``f`` share one A-degree (true for 0)."""
    return len({grading.degree(m) for m in f.monomials()}) <= 1


def is_a_graded(ideal: Ideal, grading: GradingMatrix) -> bool:
    """Sound and complete: a graded ideal has a reduced basis of homogeneous elements."""
    _check_grading(ideal, grading)
    return all(is_homogeneous(g, grading) for g in ideal.groebner_basis())


def compute_largest_agraded_subideal(
    ideal: Ideal, grading: GradingMatrix, operation: str = "largest_agraded_subideal"
) -> AGradedResult:
    """Run the pipeline and keep a report of every stage."""
    _check_grading(ideal, grading)
    ring = ideal.ring
    report = ComputationReport(
        operation=operation,
        field=str(ring.field),
        variables=list(ring.variable_names),
        order=str(ring.order),
        input_generators=len(ideal.generators),
        grading_shape=grading.shape,
    )
    recorder = _StageRecorder(report)

    def finish(result: Ideal) -> AGradedResult:
        report.output_generators = len(result.generators)
        logger.info("pipeline_finished", operation=operation, flags=report.flags, basis_size=len(result.generators))
        return AGradedResult(result, report)

    if ideal.is_zero():
        report.flags.append("zero_ideal")
        return finish(ideal)
    if grading.d == 0:
        report.flags.append("empty_grading")
        with recorder.stage("groebner_basis", ring) as sizes:
            presented = _presented(ideal)
            sizes.append(len(presented.generators))
        return finish(presented)

    with recorder.stage("groebner_basis", ring) as sizes:
        sizes.append(len(ideal.groebner_basis()))
    if is_a_graded(ideal, grading):
        report.flags.append("already_graded")
        return finish(_presented(ideal))

    ext = ExtendedRing.over(ring, grading.d)
    with recorder.stage("substitute_grading", ext.combined) as sizes:
        substituted = substitute_grading(ideal, grading)
        sizes.append(len(substituted.generators))
    with recorder.stage("saturate_and_eliminate", ext.combined) as sizes:
        contracted = torus_contraction(ext, substituted)
        sizes.append(len(contracted.generators))
    with recorder.stage("reduced_basis", ring) as sizes:
        result = _presented(contracted.with_order(ring.order))
        sizes.append(len(result.generators))
    return finish(result)


def largest_agraded_subideal(ideal: Ideal, grading: GradingMatrix) -> Ideal:
    """The largest A-graded ideal contained in ``ideal``, presented by its reduced basis."""
    return compute_largest_agraded_subideal(ideal, grading).ideal


def compute_largest_monomial_subideal(ideal: Ideal) -> AGradedResult:
    return compute_largest_agraded_subideal(
        ideal, GradingMatrix.identity(ideal.ring.nvars), operation="largest_monomial_subideal"
    )


def largest_monomial_subideal(ideal: Ideal) -> Ideal:
    """The ideal generated by every monomial of ``ideal``; its reduced basis is monomials."""
    return compute_largest_monomial_subideal(ideal).ideal


def contains_monomial(ideal: Ideal) -> bool:
    """I contains a monomial iff (I : (x_1...x_n)^infinity) is the unit ideal."""
    ring = ideal.ring
    product = Polynomial.monomial(ring, (1,) * ring.nvars)
    answer = is_unit_ideal(saturate(ideal, product))
    logger.info("contains_monomial", variables=list(ring.variable_names), answer=answer)
    return answer


def monomials_up_to(ideal: Ideal, degree: int) -> FrozenSet[ExponentVector]:
    """Exponent vectors of total degree <= ``degree`` whose monomial lies in ``ideal``.

    Enumerated combinatorially from the monomial generators of the largest
    monomial subideal.
    """
    if degree < 0:
        raise ValueError(f"degree bound must be nonnegative, got {degree}")
    leads = [g.LM for g in largest_monomial_subideal(ideal).generators]
    return frozenset(
        b
        for b in monomials_up_to_degree(ideal.ring.nvars, degree)
        if any(monomial_divides(lead, b) for lead in leads)
    )
