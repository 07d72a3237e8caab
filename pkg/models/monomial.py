"""Monomials, monomial ideals and the localized-membership predicate.

Exponent vectors are plain tuples of ints, 0-based internally. A vector with
negative entries is a graded degree gamma; its negative support G_gamma and its
truncation gamma' (negatives set to 0) are what localized membership looks at.
"""
import logging
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence, Tuple

from sympy.polys.monomials import monomial_divides, monomial_lcm, monomial_mul

from models.errors import DimensionMismatchError, DomainError
from models.vertices import MAX_VARIABLES, full_mask, to_mask

logger = logging.getLogger(__name__)

ExponentVector = Tuple[int, ...]
MembershipTest = Callable[[int], bool]


def negative_support(gamma: Sequence[int]) -> int:
    """G_gamma as a bitmask."""
    return to_mask(i for i, e in enumerate(gamma) if e < 0)


def truncate(gamma: Sequence[int]) -> ExponentVector:
    """gamma' : negative entries replaced by 0."""
    return tuple(max(e, 0) for e in gamma)


def support_mask(exponents: Sequence[int]) -> int:
    return to_mask(i for i, e in enumerate(exponents) if e > 0)


def _check_n(n: int) -> None:
    if n < 0 or n > MAX_VARIABLES:
        raise DomainError(f"variable count must be between 0 and {MAX_VARIABLES}, got {n}")


def _antichain(gens: Iterable[ExponentVector]) -> Tuple[ExponentVector, ...]:
    # Ascending total degree: a divisor is always seen before its multiples.
    candidates = sorted(set(gens), key=lambda g: (sum(g), g))
    kept = []
    kept_masks = []
    for g in candidates:
        g_mask = support_mask(g)
        if any(
            not (h_mask & ~g_mask) and monomial_divides(h, g)
            for h, h_mask in zip(kept, kept_masks)
        ):
            continue
        kept.append(g)
        kept_masks.append(g_mask)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal of k[x_1..x_n] given by its minimal generators.

    Build instances through `minimalize` (or the `zero` / `unit` helpers); the
    generator tuple is then a lexicographically sorted divisibility antichain,
    so dataclass equality is ideal equality.
    """

    n: int
    generators: Tuple[ExponentVector, ...]

    @classmethod
    def zero(cls, n: int) -> "MonomialIdeal":
        _check_n(n)
        return cls(n, ())

    @classmethod
    def unit(cls, n: int) -> "MonomialIdeal":
        _check_n(n)
        return cls(n, ((0,) * n,))

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return self.generators == ((0,) * self.n,)

    @property
    def is_squarefree(self) -> bool:
        return all(e <= 1 for g in self.generators for e in g)

    def support(self) -> int:
        """supp(I): variables occurring in some minimal generator, as a bitmask."""
        mask = 0
        for g in self.generators:
            mask |= support_mask(g)
        return mask

    def rho(self) -> ExponentVector:
        """Largest exponent of each variable over the minimal generators."""
        if not self.generators:
            return (0,) * self.n
        return tuple(max(column) for column in zip(*self.generators))

    def contains(self, gamma: Sequence[int]) -> bool:
        """Ordinary membership of the monomial x^gamma (gamma >= 0)."""
        gamma = tuple(gamma)
        if len(gamma) != self.n:
            raise DimensionMismatchError(f"degree has {len(gamma)} entries, ring has {self.n} variables")
        if any(e < 0 for e in gamma):
            raise DomainError("ordinary membership needs a nonnegative exponent vector")
        return any(monomial_divides(g, gamma) for g in self.generators)

    def membership_test(self, gamma: Sequence[int]) -> MembershipTest:
        """Predicate L -> [x^gamma in I S_L] for localization sets L containing G_gamma.

        A generator m witnesses membership iff m_i <= gamma'_i for every i outside L,
        i.e. iff its blocking set {i : m_i > gamma'_i} lies inside L.
        """
        if len(gamma) != self.n:
            raise DimensionMismatchError(f"degree has {len(gamma)} entries, ring has {self.n} variables")
        floor = truncate(gamma)
        blocks = []
        for g in self.generators:
            block = to_mask(i for i, (e, c) in enumerate(zip(g, floor)) if e > c)
            if block == 0:
                return lambda localization: True
            blocks.append(block)
        return lambda localization: any(not (b & ~localization) for b in blocks)

    def __str__(self) -> str:
        from utils.formats import format_ideal

        return format_ideal(self)


def minimalize(gens: Iterable[Sequence[int]], n: Optional[int] = None) -> MonomialIdeal:
    """The ideal generated by `gens`, as a canonical antichain of minimal generators.

    Without `n` the ring size comes from the first generator; an empty list then
    gives the zero ideal of the configured default ring (DEGCX_DEFAULT_N).
    """
    gens = [tuple(g) for g in gens]
    if n is None:
        if gens:
            n = len(gens[0])
        else:
            from utils.config import get_config

            n = get_config().default_n
    _check_n(n)
    for g in gens:
        if len(g) != n:
            raise DimensionMismatchError(f"generator {g} has {len(g)} entries, expected {n}")
        if any(e < 0 for e in g):
            raise DomainError(f"generator {g} has a negative exponent")
    return MonomialIdeal(n, _antichain(gens))


def _same_ring(I: MonomialIdeal, J: MonomialIdeal) -> None:
    if I.n != J.n:
        raise DimensionMismatchError(f"ideals live in rings with {I.n} and {J.n} variables")


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    return MonomialIdeal(I.n, _antichain(I.generators + J.generators))


def product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    return MonomialIdeal(I.n, _antichain(monomial_mul(g, h) for g in I.generators for h in J.generators))


def power(I: MonomialIdeal, s: int) -> MonomialIdeal:
    """I^s; I^0 is the unit ideal."""
    if s < 0:
        raise DomainError(f"power exponent must be nonnegative, got {s}")
    result = MonomialIdeal.unit(I.n)
    for _ in range(s):
        result = product(result, I)
    return result


def intersection(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    return MonomialIdeal(I.n, _antichain(monomial_lcm(g, h) for g in I.generators for h in J.generators))


def radical(I: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal(I.n, _antichain(tuple(min(e, 1) for e in g) for g in I.generators))


def is_subideal(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    """I is contained in J."""
    _same_ring(I, J)
    return all(J.contains(g) for g in I.generators)


def localized_membership(I, gamma: Sequence[int], face: int) -> bool:
    """x^gamma in I S_{F + G_gamma}, for a face candidate F disjoint from G_gamma.

    `I` is anything exposing `membership_test` (an ordinary ideal or a symbolic
    power view).
    """
    negatives = negative_support(gamma)
    if face & negatives:
        raise DomainError("face candidate meets the negative support of the degree")
    return I.membership_test(gamma)(face | negatives)


def block_masks(n: int, m: int) -> Tuple[int, int]:
    """Bitmasks of the blocks X = {1..m} and Y = {m+1..n}."""
    if not 0 <= m <= n:
        raise DomainError(f"block split {m} is outside 0..{n}")
    low = full_mask(m)
    return low, full_mask(n) & ~low


def check_disjoint_blocks(I: MonomialIdeal, J: MonomialIdeal, m: int) -> Tuple[int, int]:
    """Raise unless supp(I) lies in {1..m} and supp(J) in {m+1..n}; return the block masks."""
    _same_ring(I, J)
    x_mask, y_mask = block_masks(I.n, m)
    if I.support() & ~x_mask or J.support() & ~y_mask:
        raise DomainError(f"ideals are not supported on the disjoint blocks split at {m}")
    return x_mask, y_mask


def block_maximal_product(n: int, m: int) -> MonomialIdeal:
    """The product of the block maximal ideals, (x_i x_j : i <= m < j)."""
    block_masks(n, m)
    gens = []
    for i in range(m):
        for j in range(m, n):
            g = [0] * n
            g[i] = g[j] = 1
            gens.append(tuple(g))
    return MonomialIdeal(n, _antichain(gens))


def fiber_product_ideal(I: MonomialIdeal, J: MonomialIdeal, m: int) -> MonomialIdeal:
    """I + J + mn for I, J on the blocks split at m."""
    check_disjoint_blocks(I, J, m)
    return ideal_sum(ideal_sum(I, J), block_maximal_product(I.n, m))
