"""Graded local cohomology of S/I through Takayama's formula.

dim H^p(S/I)_gamma = dim H~_{p-|G|-1}(Delta_gamma(I)) when G = G_gamma is a face
of Delta_0(I), and 0 otherwise. The sum, product and fiber-product formulas are
evaluated from the two factor rings only; `takayama_dim` on the assembled ideal
is the oracle they are checked against.
"""
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product as cartesian
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from models.complex import intersect, join
from models.errors import DomainError, ScanLimitError
from models.monomial import ExponentVector, MonomialIdeal, block_masks, check_disjoint_blocks, negative_support
from models.vertices import full_mask, popcount
from services.degree_complex import (
    PowerMode,
    power_view,
    block_complex,
    degree_complex_direct,
    formula_fiber_product,
    mayer_vietoris_layers,
)
from services.homology import euler_characteristic, reduced_homology_dims
from utils.config import get_config

logger = logging.getLogger(__name__)

JOIN_SHIFT = 1


def _check_p(p: int) -> None:
    if p < 0:
        raise DomainError(f"cohomological degree must be nonnegative, got {p}")


def gate_open(ideal, gamma: Sequence[int], block: int) -> bool:
    """G_gamma (within the block) is a face of Delta_0 of the ideal."""
    negatives = negative_support(gamma) & block
    return not ideal.membership_test((0,) * ideal.n)(negatives)


@lru_cache(maxsize=16384)
def _block_homology(ideal, gamma: Tuple[int, ...], block: int) -> Dict[int, int]:
    return reduced_homology_dims(block_complex(ideal, gamma, block))


@lru_cache(maxsize=16384)
def _fiber_faces(I: MonomialIdeal, J: MonomialIdeal, s: int, gamma: Tuple[int, ...], m: int, mode: PowerMode):
    return formula_fiber_product(I, J, s, gamma, m, mode)


def block_takayama_dim(ideal, gamma: Sequence[int], p: int, block: int) -> int:
    """Takayama's formula in the polynomial ring on the variables of `block`."""
    if p < 0:
        return 0
    if not gate_open(ideal, gamma, block):
        return 0
    negatives = popcount(negative_support(gamma) & block)
    return _block_homology(ideal, tuple(gamma), block).get(p - negatives - 1, 0)


def takayama_dim(ideal, gamma: Sequence[int], p: int) -> int:
    """dim H^p(S/I)_gamma; `ideal` may be a symbolic power view."""
    _check_p(p)
    return block_takayama_dim(ideal, gamma, p, full_mask(ideal.n))


def _convolve(I, J, gamma, total: int, x_mask: int, y_mask: int) -> int:
    if total < 0:
        return 0
    return sum(
        block_takayama_dim(I, gamma, u, x_mask) * block_takayama_dim(J, gamma, total - u, y_mask)
        for u in range(total + 1)
    )


def cohomology_sum_dim(
    I: MonomialIdeal, J: MonomialIdeal, gamma: Sequence[int], p: int, m: int, shift: int = JOIN_SHIFT
) -> int:
    """dim H^p(S/(I+J))_gamma = sum_{u+v=p+1-shift} dim H^u(A/I)_alpha * dim H^v(B/J)_beta."""
    _check_p(p)
    x_mask, y_mask = check_disjoint_blocks(I, J, m)
    return _convolve(I, J, gamma, p + 1 - shift, x_mask, y_mask)


def cohomology_product_dim(
    I: MonomialIdeal, J: MonomialIdeal, gamma: Sequence[int], p: int, m: int, shift: int = JOIN_SHIFT
) -> int:
    """dim H^p(S/IJ)_gamma, one degree below the sum convolution.

    When G_gamma swallows a whole block the simplex on the rest of that block is
    the irrelevant complex, not a contractible one, and Delta_gamma(IJ) collapses to
    the other side's complex; the dimension is then read from that side alone.
    """
    _check_p(p)
    x_mask, y_mask = check_disjoint_blocks(I, J, m)
    if I.is_zero or J.is_zero:
        raise DomainError("product cohomology needs nonzero factors")
    negatives = negative_support(gamma)
    if not y_mask & ~negatives:
        return block_takayama_dim(I, gamma, p - popcount(y_mask), x_mask)
    if not x_mask & ~negatives:
        return block_takayama_dim(J, gamma, p - popcount(x_mask), y_mask)
    return _convolve(I, J, gamma, p - shift, x_mask, y_mask)


def cohomology_fiber_dim(
    I: MonomialIdeal,
    J: MonomialIdeal,
    s: int,
    gamma: Sequence[int],
    p: int,
    m: int,
    mode: PowerMode = PowerMode.ORDINARY,
    diamond_plus_one: bool = True,
) -> int:
    """dim H^p(S/(I+J+mn)^s)_gamma (or the symbolic power) from the factor rings.

    p >= 1: side terms H^p(A/I^(s-|beta|))_alpha + H^p(B/J^(s-|alpha|))_beta, plus 1 when
    p = 1 and both sides have a nonempty face. `diamond_plus_one=False` drops the +1
    in the symbolic case. p = 0: 1 exactly when G_gamma is empty and the complex
    is the irrelevant one.
    """
    _check_p(p)
    faces = _fiber_faces(I, J, s, tuple(gamma), m, mode)
    negatives = negative_support(gamma)
    if p == 0:
        return int(not negatives and not faces.nonempty_faces and faces.empty_face_present)

    x_mask, y_mask = block_masks(I.n, m)
    alpha_total, beta_total = sum(gamma[:m]), sum(gamma[m:])
    value = 0
    if not negatives & y_mask and beta_total < s:
        value += block_takayama_dim(power_view(I, s - beta_total, mode), gamma, p, x_mask)
    if not negatives & x_mask and alpha_total < s:
        value += block_takayama_dim(power_view(J, s - alpha_total, mode), gamma, p, y_mask)
    if p == 1 and faces.a_faces and faces.b_faces:
        if mode is PowerMode.ORDINARY or diamond_plus_one:
            value += 1
    return value


def diamond_holds(I: MonomialIdeal, J: MonomialIdeal, s: int, gamma: Sequence[int], p: int, m: int, mode: PowerMode) -> bool:
    if p != 1:
        return False
    faces = _fiber_faces(I, J, s, tuple(gamma), m, mode)
    return bool(faces.a_faces and faces.b_faces)


@dataclass
class CohomologyTable:
    """Nonzero dim H^p(S/I)_gamma over the scan window.

    The window holds gamma_i in {-1, 0, .., rho_i - 1}: every negative entry acts
    like -1, and gamma_i >= rho_i makes the degree complex a cone on i.
    """

    n: int
    window: List[Tuple[int, int]]
    entries: Dict[Tuple[int, ExponentVector], int] = field(default_factory=dict)

    def reg(self) -> Tuple[int, Tuple[int, ExponentVector]]:
        """max p + |gamma| and a witnessing (p, gamma)."""
        if not self.entries:
            raise DomainError("the quotient by the unit ideal is zero; regularity is undefined")
        key = max(self.entries, key=lambda k: (k[0] + sum(k[1]), k))
        return key[0] + sum(key[1]), key

    def depth(self) -> Tuple[int, Tuple[int, ExponentVector]]:
        """min p and a witnessing (p, gamma)."""
        if not self.entries:
            raise DomainError("the quotient by the unit ideal is zero; depth is undefined")
        key = min(self.entries)
        return key[0], key

    def rows(self) -> List[dict]:
        return [{"p": p, "gamma": list(g), "dim": d} for (p, g), d in sorted(self.entries.items())]


def scan_window(I: MonomialIdeal) -> List[Tuple[int, int]]:
    return [(-1, r - 1) for r in I.rho()]


def lattice_size(window: Sequence[Tuple[int, int]]) -> int:
    size = 1
    for low, high in window:
        size *= high - low + 1
    return size


def scan_cohomology(I: MonomialIdeal, max_lattice: Optional[int] = None) -> CohomologyTable:
    """Every nonzero graded piece of the local cohomology of S/I."""
    window = scan_window(I)
    table = CohomologyTable(I.n, window)
    if I.is_unit:
        return table
    limit = get_config().max_lattice if max_lattice is None else max_lattice
    size = lattice_size(window)
    if size > limit:
        logger.error(f"Refusing scan of {size} lattice points (limit {limit})")
        raise ScanLimitError(size, limit)
    logger.info(f"Scanning {size} degrees for an ideal with {len(I.generators)} generators")

    zero = (0,) * I.n
    delta_zero = I.membership_test(zero)
    for gamma in cartesian(*(range(low, high + 1) for low, high in window)):
        negatives = negative_support(gamma)
        if delta_zero(negatives):
            continue
        dims = reduced_homology_dims(degree_complex_direct(I, gamma))
        for q, d in dims.items():
            p = q + popcount(negatives) + 1
            if d and p >= 0:
                table.entries[(p, gamma)] = d
    logger.debug(f"Scan found {len(table.entries)} nonzero entries")
    return table


def reg_of_quotient(I: MonomialIdeal, max_lattice: Optional[int] = None) -> int:
    return scan_cohomology(I, max_lattice).reg()[0]


def depth_of_quotient(I: MonomialIdeal, max_lattice: Optional[int] = None) -> int:
    return scan_cohomology(I, max_lattice).depth()[0]


def reg_symbolic_fiber_formula(reg_i: Mapping[int, int], reg_j: Mapping[int, int], s: int) -> int:
    """max over 1 <= t <= s of reg(A/I^(t)) + s - t, reg(B/J^(t)) + s - t and 2s - 1."""
    if s < 1:
        raise DomainError(f"power exponent must be positive, got {s}")
    missing = [t for t in range(1, s + 1) if t not in reg_i or t not in reg_j]
    if missing:
        raise DomainError(f"regularity values missing for t = {missing}")
    return max(
        [reg_i[t] + s - t for t in range(1, s + 1)]
        + [reg_j[t] + s - t for t in range(1, s + 1)]
        + [2 * s - 1]
    )


@dataclass
class EulerLayer:
    i: int
    whole: int
    new_piece: int
    rest: int
    overlap: int
    overlap_matches: bool

    @property
    def passed(self) -> bool:
        return self.overlap_matches and self.whole == self.new_piece + self.rest - self.overlap


def mayer_vietoris_euler_layers(I: MonomialIdeal, J: MonomialIdeal, s: int, gamma: Sequence[int], m: int) -> List[EulerLayer]:
    """Euler characteristics of Delta_i = (A_i * B_(s-i+1)) u Delta_(i+1) for i = 1..s-1.

    The overlap of the two pieces must be A_i * B_(s-i); that is checked as a face
    set before the characteristics are compared.
    """
    mv = mayer_vietoris_layers(I, J, s, gamma, m)
    result = []
    for i in range(1, s):
        piece = join(mv.a_side[i], mv.b_side[s - i + 1])
        overlap = join(mv.a_side[i], mv.b_side[s - i])
        actual_overlap = intersect(piece, mv.layers[i + 1])
        result.append(
            EulerLayer(
                i=i,
                whole=euler_characteristic(mv.layers[i]),
                new_piece=euler_characteristic(piece),
                rest=euler_characteristic(mv.layers[i + 1]),
                overlap=euler_characteristic(overlap),
                overlap_matches=actual_overlap.faces() == overlap.faces(),
            )
        )
    return result


def mayer_vietoris_euler_check(I: MonomialIdeal, J: MonomialIdeal, s: int, gamma: Sequence[int], m: int) -> bool:
    layers = mayer_vietoris_euler_layers(I, J, s, gamma, m)
    for layer in layers:
        if not layer.passed:
            logger.warning(f"Mayer-Vietoris layer {layer.i} failed: {layer}")
    return all(layer.passed for layer in layers)
