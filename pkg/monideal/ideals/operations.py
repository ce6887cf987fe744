"""Ideal constructions: ring extension, grading substitution, saturation, elimination.

The torus variables t_1..t_d are never inverted. A substituted generator is
multiplied by the least power of t that clears its negative exponents (a unit
in the Laurent ring), and the contraction from the Laurent ring is realized
as saturation at t_1*...*t_d followed by elimination of the t-block.
"""

from dataclasses import dataclass
from typing import Iterable, Tuple

from monideal.errors import DimensionMismatchError, RingMismatchError, ZeroPolynomialError
from monideal.ideals.grading import GradingMatrix
from monideal.ideals.groebner import Ideal
from monideal.logging_config import get_logger
from monideal.poly.orders import Block, GrevLex
from monideal.poly.polynomial import Polynomial
from monideal.poly.ring import RingContext, fresh_name

logger = get_logger(__name__)


@dataclass(frozen=True)
class ExtendedRing:
    """k[t_1..t_d, x_1..x_n] with an order eliminating the t-block."""

    base: RingContext
    t_count: int
    combined: RingContext

    @classmethod
    def over(cls, base: RingContext, t_count: int, prefix: str = "t") -> "ExtendedRing":
        if t_count < 0:
            raise DimensionMismatchError("cannot adjoin a negative number of variables")
        taken = set(base.variable_names)
        t_names = []
        for i in range(1, t_count + 1):
            name = fresh_name(f"{prefix}{i}", taken)
            taken.add(name)
            t_names.append(name)
        combined = base.with_variables(
            t_names + list(base.variable_names), Block(t_count, GrevLex(), GrevLex())
        )
        return cls(base, t_count, combined)

    @property
    def t_names(self) -> Tuple[str, ...]:
        return self.combined.variable_names[: self.t_count]

    def embed(self, f: Polynomial) -> Polynomial:
        if f.ring != self.base:
            raise RingMismatchError(f"polynomial over {f.ring} embedded into an extension of {self.base}")
        pad = (0,) * self.t_count
        return f.map_monomials(self.combined, lambda m: pad + m)

    def torus_product(self) -> Polynomial:
        """t_1 * ... * t_d in the combined ring."""
        exponents = (1,) * self.t_count + (0,) * self.base.nvars
        return Polynomial.monomial(self.combined, exponents)


def extend_ring(ideal: Ideal, new_vars: int) -> Ideal:
    """The same generators viewed in k[t_1..t_new_vars, x] with the t-eliminating order."""
    ext = ExtendedRing.over(ideal.ring, new_vars)
    return Ideal(ext.combined, [ext.embed(g) for g in ideal.generators])


def substitute_grading(ideal: Ideal, grading: GradingMatrix) -> Ideal:
    """Replace each x_i by t^(a_i) x_i and clear negative t-exponents per generator.

    A generator whose terms carry t-exponent vectors e_1..e_k is multiplied
    by t^c with c_j = max(0, -min_k e_kj), the least monomial making every
    exponent nonnegative. With ``d = 0`` the ideal is returned unchanged.
    """
    ring = ideal.ring
    if grading.n != ring.nvars:
        raise DimensionMismatchError(
            f"a {grading.d}x{grading.n} grading cannot act on {ring.nvars} variables"
        )
    if grading.d == 0:
        return ideal
    ext = ExtendedRing.over(ring, grading.d)
    generators = []
    for g in ideal.generators:
        t_exponents = [grading.degree(m) for m in g.monomials()]
        shift = [max(0, -min(column)) for column in zip(*t_exponents)]
        terms = [
            (term.coeff, tuple(e + s for e, s in zip(te, shift)) + term.monomial)
            for te, term in zip(t_exponents, g.terms)
        ]
        generators.append(Polynomial(ext.combined, terms))
    return Ideal(ext.combined, generators)


def rabinowitsch(ideal: Ideal, f: Polynomial) -> Ideal:
    """I + (1 - u*f) in k[u, x] with u fresh and first in an order eliminating it."""
    ring = ideal.ring
    if not f:
        raise ZeroPolynomialError("cannot saturate by the zero polynomial")
    if f.ring != ring:
        raise RingMismatchError(f"saturating an ideal of {ring} by a polynomial over {f.ring}")
    u = fresh_name("u", ring.variable_names)
    big = ring.with_variables((u,) + ring.variable_names, Block(1, GrevLex(), GrevLex()))

    def lift(p: Polynomial) -> Polynomial:
        return p.map_monomials(big, lambda m: (0,) + m)

    u_var = Polynomial.variable(big, 0)
    generators = [lift(g) for g in ideal.generators]
    generators.append(Polynomial.one(big) - u_var * lift(f))
    return Ideal(big, generators)


def eliminate(ideal: Ideal, drop_vars: Iterable[int]) -> Ideal:
    """I intersected with k[remaining variables].

    The result lives in the ring of the remaining variables (original
    relative order) under grevlex, with its reduced basis already cached.
    """
    ring = ideal.ring
    n = ring.nvars
    drop = sorted(set(drop_vars))
    for i in drop:
        if not isinstance(i, int) or not 0 <= i < n:
            raise DimensionMismatchError(f"variable index {i} out of range for {n} variables")
    if not drop:
        return ideal
    keep = [i for i in range(n) if i not in drop]
    permutation = drop + keep
    names = ring.variable_names
    k = len(drop)

    work_ring = ring.with_variables([names[i] for i in permutation], Block(k, GrevLex(), GrevLex()))
    moved = Ideal(
        work_ring,
        [g.map_monomials(work_ring, lambda m: tuple(m[i] for i in permutation)) for g in ideal.generators],
    )
    basis = moved.groebner_basis()

    small_ring = ring.with_variables([names[i] for i in keep], GrevLex())
    survivors = [g.map_monomials(small_ring, lambda m: m[k:]) for g in basis if not g.involves(range(k))]
    logger.debug(
        "elimination_finished",
        dropped=[names[i] for i in drop],
        block_basis_size=len(basis),
        basis_size=len(survivors),
    )
    return Ideal(small_ring, survivors, reduced_groebner_basis=survivors)


def saturate(ideal: Ideal, f: Polynomial) -> Ideal:
    """(I : f^infinity), returned in the ring of ``ideal``."""
    saturated = eliminate(rabinowitsch(ideal, f), [0])
    if saturated.ring == ideal.ring:
        return saturated
    return Ideal(
        ideal.ring, [g.map_monomials(ideal.ring, lambda m: m) for g in saturated.generators]
    )


def torus_contraction(ext: ExtendedRing, ideal: Ideal) -> Ideal:
    """(J : (t_1...t_d)^infinity) intersected with k[x], in one Groebner basis computation.

    ``ideal`` lives in ``ext.combined``; u and the whole t-block are
    eliminated together. The result is in the base variables under grevlex.
    """
    if ideal.ring != ext.combined:
        raise RingMismatchError(f"expected an ideal of {ext.combined}, got one of {ideal.ring}")
    return eliminate(rabinowitsch(ideal, ext.torus_product()), range(ext.t_count + 1))
