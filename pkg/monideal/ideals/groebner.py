"""Ideals and Buchberger's algorithm.

Pair handling follows the Gebauer-Moeller installation of Buchberger's two
criteria (coprime leading monomials, lcm chains). Pairs are selected by the
sugar strategy by default, or by the normal strategy, with ties broken by
the lcm and then the pair indices, so runs are deterministic and reports
reproducible.

Reduction works on a monomial -> coefficient dict with a heap of negated
order keys, so each division step touches only the reducer's terms.
Buchberger's loop reduces S-polynomials at the top only; tails are reduced
once, when the basis is interreduced.
"""

import heapq
from typing import Callable, Dict, Iterable, List, NamedTuple, Optional, Sequence, Set, Tuple

from monideal.errors import RingMismatchError, ZeroPolynomialError
from monideal.logging_config import get_logger
from monideal.poly.field import Scalar
from monideal.poly.monomial import (
    ExponentVector,
    check_degree_sum,
    monomial_div,
    monomial_divides,
    monomial_lcm,
    monomial_mul,
    monomials_coprime,
)
from monideal.poly.orders import MonomialOrder
from monideal.poly.polynomial import Polynomial, Term
from monideal.poly.ring import RingContext

logger = get_logger(__name__)

Pair = Tuple[int, int]
ReductionObserver = Callable[[Polynomial, Polynomial], None]
SELECTION_STRATEGIES = ("sugar", "normal")


def _check_same_ring(polys: Iterable[Polynomial], ring: RingContext) -> None:
    for p in polys:
        if p.ring != ring:
            raise RingMismatchError(f"polynomial over {p.ring} used with {ring}")


class _HeapKeys(dict):
    """Monomial -> negated order key, computed once per monomial."""

    def __init__(self, order: MonomialOrder):
        super().__init__()
        self._key = order.key

    def __missing__(self, monomial: ExponentVector) -> tuple:
        value = self[monomial] = tuple(-v for v in self._key(monomial))
        return value


class _Reducer(NamedTuple):
    lm: ExponentVector
    lc: Scalar
    tail: Tuple[Term, ...]
    degree: int
    sugar: int
    poly: Polynomial


def _reducer(g: Polynomial, sugar: Optional[int] = None) -> _Reducer:
    degree = g.total_degree()
    return _Reducer(g.LM, g.LC, g.terms[1:], degree, degree if sugar is None else sugar, g)


def _sorted_reducers(reducers: Iterable[_Reducer], order: MonomialOrder) -> List[_Reducer]:
    return sorted(reducers, key=lambda r: order.key(r.lm))


def _reduce(
    f: Polynomial,
    reducers: Sequence[_Reducer],
    heap_keys: _HeapKeys,
    *,
    full: bool = True,
    sugar: int = 0,
    observer: Optional[ReductionObserver] = None,
) -> Tuple[Polynomial, int]:
    """Divide ``f`` by ``reducers`` (ascending by leading monomial).

    The greatest reducible term is reduced next, by the first reducer whose
    leading monomial divides it. With ``full=False`` division stops at the
    first irreducible term. Returns the remainder and its sugar degree.
    """
    ring = f.ring
    field = ring.field
    acc: Dict[ExponentVector, Scalar] = {t.monomial: t.coeff for t in f.terms}
    heap = [(heap_keys[m], m) for m in acc]
    heapq.heapify(heap)
    remainder: Dict[ExponentVector, Scalar] = {}

    while heap:
        _, monomial = heapq.heappop(heap)
        coeff = acc.pop(monomial, None)
        if coeff is None:
            continue
        reducer = next((r for r in reducers if monomial_divides(r.lm, monomial)), None)
        if reducer is None:
            if not full:
                acc[monomial] = coeff
                break
            remainder[monomial] = coeff
            continue

        quotient = field.div(coeff, reducer.lc)
        shift = monomial_div(monomial, reducer.lm)
        shift_degree = sum(shift)
        check_degree_sum(reducer.degree, shift_degree)
        if observer is not None:
            current = Polynomial.from_dict(ring, {**remainder, **acc, monomial: coeff})
            observer(current, reducer.poly.mul_term(quotient, shift))
        sugar = max(sugar, reducer.sugar + shift_degree)

        for tail_coeff, tail_monomial in reducer.tail:
            target = monomial_mul(tail_monomial, shift)
            delta = field.mul(quotient, tail_coeff)
            if target in acc:
                value = field.sub(acc[target], delta)
                if field.is_zero(value):
                    del acc[target]
                else:
                    acc[target] = value
            else:
                acc[target] = field.neg(delta)
                heapq.heappush(heap, (heap_keys[target], target))

    remainder.update(acc)
    return Polynomial.from_dict(ring, remainder), sugar


def normal_form(
    f: Polynomial,
    basis: Sequence[Polynomial],
    *,
    observer: Optional[ReductionObserver] = None,
) -> Polynomial:
    """Fully reduce ``f`` by ``basis``.

    The greatest reducible term is always reduced next, by the first basis
    element (ascending by leading monomial) whose leading monomial divides it.
    ``observer(current, subtrahend)`` is called before every division step.
    """
    ring = f.ring
    _check_same_ring(basis, ring)
    reducers = _sorted_reducers((_reducer(g) for g in basis if g), ring.order)
    remainder, _ = _reduce(f, reducers, _HeapKeys(ring.order), observer=observer)
    return remainder


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    """(lcm/LT(f))*f - (lcm/LT(g))*g; the leading terms cancel."""
    if not f or not g:
        raise ZeroPolynomialError("S-polynomial of a zero polynomial")
    if f.ring != g.ring:
        raise RingMismatchError(f"cannot pair polynomials over {f.ring} and {g.ring}")
    field = f.ring.field
    lcm = monomial_lcm(f.LM, g.LM)
    left = f.mul_term(field.inv(f.LC), monomial_div(lcm, f.LM))
    right = g.mul_term(field.inv(g.LC), monomial_div(lcm, g.LM))
    return left - right


def _pair_sugar(lcm: ExponentVector, first: _Reducer, second: _Reducer) -> int:
    degree = sum(lcm)
    return max(first.sugar + degree - sum(first.lm), second.sugar + degree - sum(second.lm))


def _pair_key(strategy: str, basis: List[_Reducer], pair: Pair, order: MonomialOrder) -> tuple:
    """Sugar: smallest sugar degree first. Normal: smallest lcm degree first. Then lcm, then indices."""
    first, second = basis[pair[0]], basis[pair[1]]
    lcm = monomial_lcm(first.lm, second.lm)
    primary = _pair_sugar(lcm, first, second) if strategy == "sugar" else sum(lcm)
    return primary, order.key(lcm), pair


def _update(basis: List[_Reducer], pairs: Set[Pair], f: _Reducer) -> Tuple[List[_Reducer], Set[Pair]]:
    """Add ``f`` to the basis and prune the pair set with the Gebauer-Moeller criteria."""
    lmf = f.lm
    leads = [g.lm for g in basis]
    order_key = f.poly.ring.order.key

    def kept(pair: Pair) -> bool:
        i, j = pair
        lcm_ij = monomial_lcm(leads[i], leads[j])
        return (
            not monomial_divides(lmf, lcm_ij)
            or lcm_ij == monomial_lcm(leads[i], lmf)
            or lcm_ij == monomial_lcm(leads[j], lmf)
        )

    pairs = {p for p in pairs if kept(p)}

    by_lcm: Dict[ExponentVector, List[int]] = {}
    for i, lm in enumerate(leads):
        by_lcm.setdefault(monomial_lcm(lm, lmf), []).append(i)
    minimal_lcms: List[ExponentVector] = []
    for lcm in sorted(by_lcm, key=order_key):
        if all(not monomial_divides(other, lcm) for other in minimal_lcms):
            minimal_lcms.append(lcm)

    new = len(basis)
    for lcm in minimal_lcms:
        members = by_lcm[lcm]
        if not any(monomials_coprime(leads[i], lmf) for i in members):
            pairs.add((min(members), new))

    return basis + [f], pairs


def buchberger(generators: Iterable[Polynomial], selection: str = "sugar") -> List[Polynomial]:
    """A Groebner basis (not yet reduced) of the ideal the generators span.

    Accepts an ``Ideal`` or any iterable of polynomials; the zero ideal
    gives the empty list. ``selection`` is ``"sugar"`` or ``"normal"``.
    """
    if selection not in SELECTION_STRATEGIES:
        raise ValueError(f"unknown selection strategy {selection!r}; expected one of {SELECTION_STRATEGIES}")
    if isinstance(generators, Ideal):
        generators = generators.generators
    polys = [f for f in generators if f]
    if not polys:
        return []
    ring = polys[0].ring
    _check_same_ring(polys, ring)
    order = ring.order
    heap_keys = _HeapKeys(order)

    basis: List[_Reducer] = []
    pairs: Set[Pair] = set()
    for f in polys:
        basis, pairs = _update(basis, pairs, _reducer(f.monic()))
    reducers = _sorted_reducers(basis, order)
    pair_keys: Dict[Pair, tuple] = {}

    processed = 0
    while pairs:
        for pair in pairs:
            if pair not in pair_keys:
                pair_keys[pair] = _pair_key(selection, basis, pair, order)
        pair = min(pairs, key=pair_keys.__getitem__)
        pairs.remove(pair)
        processed += 1
        first, second = basis[pair[0]], basis[pair[1]]
        lcm = monomial_lcm(first.lm, second.lm)
        remainder, sugar = _reduce(
            s_polynomial(first.poly, second.poly),
            reducers,
            heap_keys,
            full=False,
            sugar=_pair_sugar(lcm, first, second),
        )
        if remainder:
            added = _reducer(remainder.monic(), sugar)
            basis, pairs = _update(basis, pairs, added)
            reducers = _sorted_reducers(reducers + [added], order)

    logger.debug(
        "buchberger_finished",
        variables=list(ring.variable_names),
        order=str(order),
        selection=selection,
        inputs=len(polys),
        pairs_reduced=processed,
        basis_size=len(basis),
    )
    return [r.poly for r in basis]


def reduced_basis(gb: Sequence[Polynomial]) -> List[Polynomial]:
    """Interreduce: monic, no term divisible by another element's leading monomial.

    Accepts any generating set. An element whose leading monomial another
    element's leading monomial divides is replaced by its top-reduced
    remainder (dropped when that is zero), and elements the new leading
    monomial divides go back to the queue. On a Groebner basis the result is
    the unique reduced basis; it is listed ascending by leading monomial.
    """
    work = [g for g in gb if g]
    if not work:
        return []
    ring = work[0].ring
    _check_same_ring(work, ring)
    order = ring.order
    heap_keys = _HeapKeys(order)

    queue = [(order.key(g.LM), index, g.monic()) for index, g in enumerate(work)]
    heapq.heapify(queue)
    counter = len(queue)
    kept: List[Polynomial] = []
    while queue:
        _, _, f = heapq.heappop(queue)
        remainder, _ = _reduce(f, _sorted_reducers(map(_reducer, kept), order), heap_keys, full=False)
        if not remainder:
            continue
        remainder = remainder.monic()
        lm = remainder.LM
        for g in kept:
            if monomial_divides(lm, g.LM):
                heapq.heappush(queue, (order.key(g.LM), counter, g))
                counter += 1
        kept = [g for g in kept if not monomial_divides(lm, g.LM)] + [remainder]

    reduced = []
    for i, g in enumerate(kept):
        others = _sorted_reducers(map(_reducer, kept[:i] + kept[i + 1:]), order)
        remainder, _ = _reduce(g, others, heap_keys)
        reduced.append(remainder.monic())
    reduced.sort(key=lambda h: order.key(h.LM))
    return reduced


class GroebnerCache(NamedTuple):
    order: MonomialOrder
    basis: Tuple[Polynomial, ...]


class Ideal:
    """An ideal given by generators, with its reduced Groebner basis computed on demand.

    Ideals are immutable: the cache is filled at most once, and any change of
    generators or order produces a new ``Ideal`` without a cache.
    """

    __slots__ = ("ring", "generators", "_gb_cache")

    def __init__(
        self,
        ring: RingContext,
        generators: Iterable[Polynomial] = (),
        *,
        reduced_groebner_basis: Optional[Sequence[Polynomial]] = None,
    ):
        gens = tuple(g for g in generators if g)
        _check_same_ring(gens, ring)
        self.ring = ring
        self.generators = gens
        self._gb_cache: Optional[GroebnerCache] = None
        if reduced_groebner_basis is not None:
            basis = tuple(reduced_groebner_basis)
            _check_same_ring(basis, ring)
            self._gb_cache = GroebnerCache(ring.order, basis)

    @classmethod
    def unit(cls, ring: RingContext) -> "Ideal":
        one = Polynomial.one(ring)
        return cls(ring, [one], reduced_groebner_basis=[one])

    def groebner_basis(self) -> Tuple[Polynomial, ...]:
        """Reduced Groebner basis under the ring's order."""
        if self._gb_cache is None:
            self._gb_cache = GroebnerCache(
                self.ring.order, tuple(reduced_basis(buchberger(self.generators)))
            )
        return self._gb_cache.basis

    def is_zero(self) -> bool:
        return not self.generators

    def contains(self, f: Polynomial) -> bool:
        return contains(self, f)

    def with_order(self, order: MonomialOrder) -> "Ideal":
        ring = self.ring.with_order(order)
        if ring == self.ring:
            return self
        return Ideal(ring, [g.map_monomials(ring, lambda m: m) for g in self.generators])

    def __str__(self) -> str:
        return "(" + ", ".join(str(g) for g in self.generators) + ")" if self.generators else "(0)"

    def __repr__(self) -> str:
        return f"Ideal({self}, ring={self.ring})"


def contains(ideal: Ideal, f: Polynomial) -> bool:
    if f.ring != ideal.ring:
        raise RingMismatchError(f"polynomial over {f.ring} tested against an ideal of {ideal.ring}")
    return not normal_form(f, ideal.groebner_basis())


def is_unit_ideal(ideal: Ideal) -> bool:
    gb = ideal.groebner_basis()
    return len(gb) == 1 and gb[0].is_constant()


def ideal_equal(first: Ideal, second: Ideal) -> bool:
    """Equal iff the reduced Groebner bases (unique per ideal and order) coincide."""
    if first.ring != second.ring:
        raise RingMismatchError(f"cannot compare ideals of {first.ring} and {second.ring}")
    return first.groebner_basis() == second.groebner_basis()


def ideal_contains(big: Ideal, small: Ideal) -> bool:
    """True iff every generator of ``small`` lies in ``big``."""
    return all(contains(big, g) for g in small.generators)
