"""Degree complexes: direct enumeration and the decomposition formulas.

Every formula builds its right-hand side from block complexes of the factor
ideals only, so each one can be compared face-for-face against
`degree_complex_direct` on the ideal it describes.
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Set, Tuple

from models.complex import SimplicialComplex, intersect, join, union, union_all
from models.errors import DimensionMismatchError, DomainError
from models.monomial import (
    ExponentVector,
    MonomialIdeal,
    check_disjoint_blocks,
    fiber_product_ideal,
    ideal_sum,
    is_subideal,
    negative_support,
    power,
    truncate,
)
from models.vertices import full_mask, iter_submasks, to_mask
from services.primes import SymbolicPower

logger = logging.getLogger(__name__)


class PowerMode(str, Enum):
    ORDINARY = "ordinary"
    SYMBOLIC = "symbolic"


@dataclass(frozen=True)
class GradedDegree:
    """A degree gamma in Z^n with its negative support and truncation."""

    gamma: ExponentVector

    @property
    def n(self) -> int:
        return len(self.gamma)

    @property
    def negatives(self) -> int:
        return negative_support(self.gamma)

    @property
    def truncated(self) -> ExponentVector:
        return truncate(self.gamma)

    @property
    def total(self) -> int:
        return sum(self.gamma)

    def split(self, m: int) -> Tuple[ExponentVector, ExponentVector]:
        """(alpha, beta) for the blocks split at m."""
        return self.gamma[:m], self.gamma[m:]

    def normalized(self) -> "GradedDegree":
        """Every negative entry replaced by -1; the degree complex does not change."""
        return GradedDegree(tuple(-1 if e < 0 else e for e in self.gamma))


def _check_degree(ideal, gamma: Sequence[int]) -> Tuple[int, ...]:
    gamma = tuple(gamma)
    if len(gamma) != ideal.n:
        raise DimensionMismatchError(f"degree has {len(gamma)} entries, ring has {ideal.n} variables")
    return gamma


def degree_complex_direct(ideal, gamma: Sequence[int]) -> SimplicialComplex:
    """Delta_gamma(I): faces F outside G_gamma with x^gamma not in I S_{F + G_gamma}.

    `ideal` is a MonomialIdeal or a SymbolicPower view.
    """
    return block_complex(ideal, gamma, full_mask(ideal.n))


def block_complex(ideal, gamma: Sequence[int], block: int) -> SimplicialComplex:
    """Degree complex of an ideal living on the variables `block`, on block minus G_gamma."""
    gamma = _check_degree(ideal, gamma)
    negatives = negative_support(gamma)
    test = ideal.membership_test(gamma)
    faces = [f for f in iter_submasks(block & ~negatives) if not test(f | negatives)]
    return SimplicialComplex.from_faces(ideal.n, faces)


def support_split(I: MonomialIdeal, gamma: Sequence[int], block: int) -> SimplicialComplex:
    """Delta_gamma(I) as the block complex on T joined with the simplex on the rest."""
    gamma = _check_degree(I, gamma)
    if I.support() & ~block:
        raise DomainError("the vertex set does not contain the support of the ideal")
    rest = full_mask(I.n) & ~block & ~negative_support(gamma)
    return join(block_complex(I, gamma, block), SimplicialComplex.simplex(I.n, rest))


def _block_simplices(n: int, m: int, gamma: Sequence[int]) -> Tuple[SimplicialComplex, SimplicialComplex]:
    low = full_mask(m)
    negatives = negative_support(gamma)
    return (
        SimplicialComplex.simplex(n, low & ~negatives),
        SimplicialComplex.simplex(n, full_mask(n) & ~low & ~negatives),
    )


def formula_sum(I: MonomialIdeal, J: MonomialIdeal, gamma: Sequence[int], m: Optional[int] = None) -> SimplicialComplex:
    """Delta_gamma(I + J).

    Without a split: Delta_gamma(I) intersected with Delta_gamma(J).
    With the split m (I on x_1..x_m, J on the rest): Delta_alpha(I) * Delta_beta(J).
    """
    if m is None:
        return intersect(degree_complex_direct(I, gamma), degree_complex_direct(J, gamma))
    x_mask, y_mask = check_disjoint_blocks(I, J, m)
    return join(block_complex(I, gamma, x_mask), block_complex(J, gamma, y_mask))


def formula_intersection(I: MonomialIdeal, J: MonomialIdeal, gamma: Sequence[int]) -> SimplicialComplex:
    return union(degree_complex_direct(I, gamma), degree_complex_direct(J, gamma))


def formula_product(I: MonomialIdeal, J: MonomialIdeal, gamma: Sequence[int], m: int) -> SimplicialComplex:
    """Delta_gamma(IJ) = (Delta_alpha(I) * Delta_Y) u (Delta_X * Delta_beta(J))."""
    x_mask, y_mask = check_disjoint_blocks(I, J, m)
    simplex_x, simplex_y = _block_simplices(I.n, m, gamma)
    return union(
        join(block_complex(I, gamma, x_mask), simplex_y),
        join(simplex_x, block_complex(J, gamma, y_mask)),
    )


def power_view(I: MonomialIdeal, t: int, mode: PowerMode):
    if mode is PowerMode.SYMBOLIC:
        return SymbolicPower(I, t)
    return power(I, t)


def _layered_union(
    I: MonomialIdeal, J: MonomialIdeal, s: int, gamma: Sequence[int], m: int, mode: PowerMode
) -> SimplicialComplex:
    if s < 1:
        raise DomainError(f"power exponent must be positive, got {s}")
    x_mask, y_mask = check_disjoint_blocks(I, J, m)
    i_side = {j: block_complex(power_view(I, j, mode), gamma, x_mask) for j in range(1, s + 1)}
    j_side = {j: block_complex(power_view(J, j, mode), gamma, y_mask) for j in range(1, s + 1)}
    return union_all(I.n, (join(i_side[j], j_side[s - j + 1]) for j in range(1, s + 1)))


def formula_power_of_sum(I: MonomialIdeal, J: MonomialIdeal, s: int, gamma: Sequence[int], m: int) -> SimplicialComplex:
    """Delta_gamma((I + J)^s) as the union over j of Delta_alpha(I^j) * Delta_beta(J^(s-j+1))."""
    return _layered_union(I, J, s, gamma, m, PowerMode.ORDINARY)


def formula_symbolic_sum(I: MonomialIdeal, J: MonomialIdeal, s: int, gamma: Sequence[int], m: int) -> SimplicialComplex:
    """Delta_gamma((I + J)^(s)) for squarefree I, J, with symbolic powers on each side."""
    return _layered_union(I, J, s, gamma, m, PowerMode.SYMBOLIC)


@dataclass(frozen=True)
class FiberFaces:
    """Nonempty faces predicted for a fiber product power, plus the direct empty-face flag.

    The prediction says nothing about the empty face; `empty_face_present` comes
    from localized membership at F = {} on the actual ideal.
    """

    n: int
    a_faces: frozenset
    b_faces: frozenset
    empty_face_present: bool

    @property
    def nonempty_faces(self) -> Set[int]:
        return set(self.a_faces | self.b_faces)

    @property
    def is_disjoint_union(self) -> bool:
        return not (self.a_faces & self.b_faces)

    def to_complex(self) -> SimplicialComplex:
        faces = self.nonempty_faces
        if not faces:
            if self.empty_face_present:
                return SimplicialComplex.irrelevant(self.n)
            return SimplicialComplex.void(self.n)
        return SimplicialComplex.from_faces(self.n, faces)


def fiber_power_view(I: MonomialIdeal, J: MonomialIdeal, s: int, m: int, mode: PowerMode = PowerMode.ORDINARY):
    """(I + J + mn)^s, or its symbolic power."""
    fiber = fiber_product_ideal(I, J, m)
    return power_view(fiber, s, mode)


def formula_fiber_product(
    I: MonomialIdeal,
    J: MonomialIdeal,
    s: int,
    gamma: Sequence[int],
    m: int,
    mode: PowerMode = PowerMode.ORDINARY,
) -> FiberFaces:
    """Nonempty faces of Delta_gamma((I + J + mn)^s) (or the symbolic power) by cases.

    The I-side contributes the nonempty faces of Delta_alpha(I^(s-|beta|)) when G_beta
    is empty and |beta| < s; the J-side symmetrically. With G_beta empty that block
    complex is Delta_gamma(I^(s-|beta|)) restricted to X.
    """
    if s < 1:
        raise DomainError(f"power exponent must be positive, got {s}")
    if not (I.is_squarefree and J.is_squarefree):
        raise DomainError("fiber product formulas need squarefree ideals")
    x_mask, y_mask = check_disjoint_blocks(I, J, m)
    gamma = _check_degree(I, gamma)
    negatives = negative_support(gamma)
    alpha_total, beta_total = sum(gamma[:m]), sum(gamma[m:])

    a_faces: frozenset = frozenset()
    if not negatives & y_mask and beta_total < s:
        side = degree_complex_direct(power_view(I, s - beta_total, mode), gamma).restrict(x_mask)
        a_faces = frozenset(side.nonempty_faces())
    b_faces: frozenset = frozenset()
    if not negatives & x_mask and alpha_total < s:
        side = degree_complex_direct(power_view(J, s - alpha_total, mode), gamma).restrict(y_mask)
        b_faces = frozenset(side.nonempty_faces())

    target = fiber_power_view(I, J, s, m, mode)
    empty_face_present = not target.membership_test(gamma)(negatives)
    return FiberFaces(I.n, a_faces, b_faces, empty_face_present)


def formula_mixed_product(
    I1: MonomialIdeal,
    I2: MonomialIdeal,
    J1: MonomialIdeal,
    J2: MonomialIdeal,
    gamma: Sequence[int],
    m: int,
) -> SimplicialComplex:
    """Delta_gamma(I1 J2 + I2 J1) for I1 in I2 on x_1..x_m and J1 in J2 on the rest."""
    if not is_subideal(I1, I2) or not is_subideal(J1, J2):
        raise DomainError("mixed product needs nested ideals I1 in I2 and J1 in J2")
    x_mask, y_mask = check_disjoint_blocks(I1, J1, m)
    check_disjoint_blocks(I2, J2, m)
    simplex_x, simplex_y = _block_simplices(I1.n, m, gamma)
    return union_all(
        I1.n,
        [
            join(simplex_x, block_complex(J2, gamma, y_mask)),
            join(block_complex(I1, gamma, x_mask), block_complex(J1, gamma, y_mask)),
            join(block_complex(I2, gamma, x_mask), simplex_y),
        ],
    )


@dataclass
class MayerVietorisLayers:
    """A_j = Delta_alpha(I^j), B_j = Delta_beta(J^j) and the layered unions
    Delta_i = union_{j=i..s} A_j * B_(s-j+1)."""

    s: int
    a_side: Dict[int, SimplicialComplex] = field(default_factory=dict)
    b_side: Dict[int, SimplicialComplex] = field(default_factory=dict)
    layers: Dict[int, SimplicialComplex] = field(default_factory=dict)


def mayer_vietoris_layers(I: MonomialIdeal, J: MonomialIdeal, s: int, gamma: Sequence[int], m: int) -> MayerVietorisLayers:
    if s < 1:
        raise DomainError(f"power exponent must be positive, got {s}")
    x_mask, y_mask = check_disjoint_blocks(I, J, m)
    result = MayerVietorisLayers(s)
    for j in range(1, s + 1):
        result.a_side[j] = block_complex(power(I, j), gamma, x_mask)
        result.b_side[j] = block_complex(power(J, j), gamma, y_mask)
    layer = SimplicialComplex.void(I.n)
    for i in range(s, 0, -1):
        layer = union(layer, join(result.a_side[i], result.b_side[s - i + 1]))
        result.layers[i] = layer
    return result


# Port of the published Macaulay2 routines, kept list based as the parity oracle.

def negative_indices(expvector: Sequence[int]) -> List[int]:
    return [i for i in range(len(expvector)) if expvector[i] < 0]


def relevant_set(someset: Sequence[int], expvector: Sequence[int]) -> List[int]:
    return sorted(set(range(len(expvector))) - set(someset) - set(negative_indices(expvector)))


def is_face(someset: Sequence[int], generators: Sequence[Sequence[int]], expvector: Sequence[int]) -> bool:
    for g in generators:
        chex = False
        for i in relevant_set(someset, expvector):
            if g[i] > expvector[i]:
                chex = True
        if not chex:
            return False
    return True


def reference_degree_complex(I: MonomialIdeal, gamma: Sequence[int]) -> SimplicialComplex:
    gamma = _check_degree(I, gamma)
    candidates = sorted(set(range(len(gamma))) - set(negative_indices(gamma)))
    face_list = []
    for size in range(len(candidates) + 1):
        for F in combinations(candidates, size):
            if is_face(list(F), I.generators, gamma):
                face_list.append(F)
    return SimplicialComplex.from_faces(I.n, [to_mask(F) for F in face_list])


def sum_oracle_ideal(I: MonomialIdeal, J: MonomialIdeal, s: int, mode: PowerMode):
    """(I + J)^s or (I + J)^(s): the ideal the layered formulas describe."""
    return power_view(ideal_sum(I, J), s, mode)
