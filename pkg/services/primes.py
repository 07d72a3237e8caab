"""Minimal primes and symbolic powers of squarefree monomial ideals."""
import logging
from dataclasses import dataclass
from itertools import product as cartesian
from typing import List, Sequence, Tuple

from models.errors import DomainError
from models.monomial import (
    MembershipTest,
    MonomialIdeal,
    _antichain,
    check_disjoint_blocks,
    intersection,
    minimalize,
    power,
    support_mask,
    truncate,
)
from models.vertices import from_mask, popcount

logger = logging.getLogger(__name__)

PrimeList = Tuple[int, ...]


def _require_squarefree(I: MonomialIdeal) -> None:
    if not I.is_squarefree:
        raise DomainError("symbolic operations need a squarefree ideal")
    if I.is_zero or I.is_unit:
        raise DomainError("the zero and unit ideals have no minimal primes to work with")


def minimal_transversals(edges: Sequence[int]) -> List[int]:
    """Minimal vertex sets meeting every edge, built one edge at a time."""
    covers = [0]
    for edge in edges:
        grown = set()
        for cover in covers:
            if cover & edge:
                grown.add(cover)
            else:
                for v in from_mask(edge):
                    grown.add(cover | (1 << v))
        kept = []
        for cover in sorted(grown, key=popcount):
            if not any(not (k & ~cover) for k in kept):
                kept.append(cover)
        covers = kept
    return covers


def _prime_sort_key(prime: int):
    return from_mask(prime)


def minimal_primes(I: MonomialIdeal) -> PrimeList:
    """Minimal primes as vertex masks, sorted by their 0-based index lists."""
    _require_squarefree(I)
    primes = minimal_transversals(sorted({support_mask(g) for g in I.generators}))
    return tuple(sorted(primes, key=_prime_sort_key))


def symbolic_membership(I: MonomialIdeal, s: int, gamma: Sequence[int]) -> bool:
    """x^gamma in I^(s), i.e. every minimal prime P has sum_{i in P} gamma_i >= s."""
    if s < 1:
        raise DomainError(f"symbolic power exponent must be positive, got {s}")
    if any(e < 0 for e in gamma):
        raise DomainError("symbolic membership needs a nonnegative exponent vector")
    return SymbolicPower(I, s).contains(gamma)


@dataclass(frozen=True)
class SymbolicPower:
    """Membership view of I^(s) for a squarefree ideal I."""

    base: MonomialIdeal
    s: int

    def __post_init__(self):
        _require_squarefree(self.base)
        if self.s < 1:
            raise DomainError(f"symbolic power exponent must be positive, got {self.s}")
        object.__setattr__(self, "primes", minimal_primes(self.base))

    @property
    def n(self) -> int:
        return self.base.n

    def contains(self, gamma: Sequence[int]) -> bool:
        return all(sum(gamma[i] for i in from_mask(p)) >= self.s for p in self.primes)

    def membership_test(self, gamma: Sequence[int]) -> MembershipTest:
        """L -> [x^gamma in I^(s) S_L]: primes meeting L become the unit ideal."""
        floor = truncate(gamma)
        short = [p for p in self.primes if sum(floor[i] for i in from_mask(p)) < self.s]
        return lambda localization: all(p & localization for p in short)

    def rho(self) -> Tuple[int, ...]:
        return self.to_ideal().rho()

    def to_ideal(self) -> MonomialIdeal:
        return symbolic_power_ideal(self.base, self.s)


def symbolic_power_ideal(I: MonomialIdeal, s: int) -> MonomialIdeal:
    """Minimal generators of I^(s).

    Every minimal generator has entries <= s on supp(I) and 0 elsewhere, so the box
    {0..s}^supp(I) is searched for members.
    """
    view = SymbolicPower(I, s)
    if s == 1:
        return I
    support = from_mask(I.support())
    members = []
    for values in cartesian(range(s + 1), repeat=len(support)):
        gamma = [0] * I.n
        for i, e in zip(support, values):
            gamma[i] = e
        if view.contains(gamma):
            members.append(tuple(gamma))
    logger.debug(f"Symbolic power {s}: {len(members)} box members")
    return MonomialIdeal(I.n, _antichain(members))


def prime_power_ideal(n: int, prime: int, s: int) -> MonomialIdeal:
    """(x_i : i in P)^s."""
    variables = minimalize([tuple(1 if j == i else 0 for j in range(n)) for i in from_mask(prime)], n=n)
    return power(variables, s)


def symbolic_power_by_intersection(I: MonomialIdeal, s: int) -> MonomialIdeal:
    """I^(s) as the iterated intersection of the prime powers P^s."""
    result = MonomialIdeal.unit(I.n)
    for prime in minimal_primes(I):
        result = intersection(result, prime_power_ideal(I.n, prime, s))
    return result


def fiber_product_primes(I: MonomialIdeal, J: MonomialIdeal, m: int) -> PrimeList:
    """Minimal primes of I + J + mn: Q + Y for Q of I, and X + R for R of J."""
    x_mask, y_mask = check_disjoint_blocks(I, J, m)
    primes = {q | y_mask for q in minimal_primes(I)} | {x_mask | r for r in minimal_primes(J)}
    # Q = X (or R = Y) makes its union the whole ring, which is no longer minimal.
    minimal = [p for p in primes if not any(o != p and not (o & ~p) for o in primes)]
    return tuple(sorted(minimal, key=_prime_sort_key))

