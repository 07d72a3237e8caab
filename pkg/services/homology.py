"""Reduced simplicial homology over a characteristic-zero field."""
import logging
from math import gcd
from typing import Dict, Iterable, List, Mapping

from models.complex import SimplicialComplex
from models.vertices import from_mask, popcount

logger = logging.getLogger(__name__)

DimensionMap = Dict[int, int]
SparseRow = Dict[int, int]


def _normalize(row: SparseRow) -> SparseRow:
    g = 0
    for v in row.values():
        g = gcd(g, v)
    if g > 1:
        return {c: v // g for c, v in row.items()}
    return row


def integer_rank(rows: Iterable[SparseRow]) -> int:
    """Rank over Q of a sparse integer matrix, by fraction-free row elimination.

    Each incoming row is reduced against the stored pivot rows on its leading
    column with `a*row - b*pivot`, so entries stay integral; rows are divided by
    the gcd of their entries after each step to keep them small.
    """
    pivots: Dict[int, SparseRow] = {}
    for row in rows:
        row = {c: v for c, v in row.items() if v}
        while row:
            col = min(row)
            pivot = pivots.get(col)
            if pivot is None:
                pivots[col] = _normalize(row)
                break
            a, b = pivot[col], row[col]
            reduced = {}
            for c in row.keys() | pivot.keys():
                v = a * row.get(c, 0) - b * pivot.get(c, 0)
                if v:
                    reduced[c] = v
            row = _normalize(reduced)
    return len(pivots)


def _faces_by_size(complex_: SimplicialComplex) -> Dict[int, List[int]]:
    by_size: Dict[int, List[int]] = {}
    for face in complex_.faces():
        by_size.setdefault(popcount(face), []).append(face)
    for faces in by_size.values():
        faces.sort()
    return by_size


def boundary_rows(faces: List[int], codim_index: Mapping[int, int]) -> List[SparseRow]:
    """Rows of the boundary map on `faces`, columns indexed by `codim_index`."""
    rows = []
    for face in faces:
        row = {}
        for j, v in enumerate(from_mask(face)):
            row[codim_index[face & ~(1 << v)]] = -1 if j % 2 else 1
        rows.append(row)
    return rows


def reduced_homology_dims(complex_: SimplicialComplex) -> DimensionMap:
    """p -> dim H~_p for p = -1 .. dim."""
    if complex_.is_void:
        return {-1: 0}
    if complex_.is_irrelevant:
        return {-1: 1}
    top = complex_.dimension()
    if complex_.is_cone() is not None:
        return {p: 0 for p in range(-1, top + 1)}

    by_size = _faces_by_size(complex_)
    # rank of the boundary out of chains of size k, k = 1 .. top+1
    ranks = {0: 0, top + 2: 0}
    for size in range(1, top + 2):
        lower = {f: i for i, f in enumerate(by_size[size - 1])}
        ranks[size] = integer_rank(boundary_rows(by_size[size], lower))
    dims = {}
    for size in range(0, top + 2):
        dims[size - 1] = len(by_size[size]) - ranks[size] - ranks[size + 1]
    logger.debug(f"Homology of {complex_}: {dims}")
    return dims


def nonzero_dims(dims: Mapping[int, int]) -> DimensionMap:
    return {p: d for p, d in sorted(dims.items()) if d}


def kunneth_join_dims(first: Mapping[int, int], second: Mapping[int, int], shift: int = 1) -> DimensionMap:
    """Convolution sum_{u+v=p-shift} first[u]*second[v].

    shift=1 is the join formula H~_p(A*B) = sum_{u+v=p-1} H~_u(A) H~_v(B), which the
    direct computation confirms; shift=0 is the unshifted variant.
    """
    result: DimensionMap = {}
    for u, du in first.items():
        for v, dv in second.items():
            if du and dv:
                p = u + v + shift
                result[p] = result.get(p, 0) + du * dv
    if not result:
        return {-1: 0}
    return dict(sorted(result.items()))


def euler_characteristic(complex_: SimplicialComplex) -> int:
    """Reduced Euler characteristic sum_F (-1)^(|F|-1), the empty face included."""
    return sum(-1 if popcount(f) % 2 == 0 else 1 for f in complex_.faces())


def alternating_sum(dims: Mapping[int, int]) -> int:
    return sum(d if p % 2 == 0 else -d for p, d in dims.items())
