"""Simplicial complexes on [n] kept as facet antichains of vertex bitmasks."""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, List, Optional, Set, Tuple

from models.errors import DimensionMismatchError, DomainError
from models.vertices import from_mask, full_mask, iter_submasks, popcount

logger = logging.getLogger(__name__)


class Kind(str, Enum):
    VOID = "void"
    IRRELEVANT = "irrelevant"
    PROPER = "proper"


def maximal_masks(masks: Iterable[int]) -> Tuple[int, ...]:
    """Inclusion-maximal nonempty masks, sorted ascending."""
    kept: List[int] = []
    for mask in sorted(set(masks), key=popcount, reverse=True):
        if mask and not any(not (mask & ~k) for k in kept):
            kept.append(mask)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class SimplicialComplex:
    """A complex on the vertex set {0..n-1}.

    Void (no faces) and irrelevant ({empty face}) are explicit kinds; a proper
    complex has at least one nonempty facet.
    """

    n: int
    kind: Kind
    facets: Tuple[int, ...] = ()

    @classmethod
    def void(cls, n: int) -> "SimplicialComplex":
        return cls(n, Kind.VOID)

    @classmethod
    def irrelevant(cls, n: int) -> "SimplicialComplex":
        return cls(n, Kind.IRRELEVANT)

    @classmethod
    def simplex(cls, n: int, vertices: int) -> "SimplicialComplex":
        if vertices & ~full_mask(n):
            raise DomainError(f"simplex vertices exceed the {n} available")
        if not vertices:
            return cls.irrelevant(n)
        return cls(n, Kind.PROPER, (vertices,))

    @classmethod
    def from_faces(cls, n: int, faces: Iterable[int]) -> "SimplicialComplex":
        """Complex generated by the given faces; an empty iterable gives the void complex."""
        faces = list(faces)
        if not faces:
            return cls.void(n)
        if any(f & ~full_mask(n) for f in faces):
            raise DomainError(f"face exceeds the {n} available vertices")
        facets = maximal_masks(faces)
        if not facets:
            return cls.irrelevant(n)
        return cls(n, Kind.PROPER, facets)

    @property
    def is_void(self) -> bool:
        return self.kind is Kind.VOID

    @property
    def is_irrelevant(self) -> bool:
        return self.kind is Kind.IRRELEVANT

    def vertices(self) -> int:
        mask = 0
        for f in self.facets:
            mask |= f
        return mask

    def dimension(self) -> Optional[int]:
        """max |F| - 1; None for the void complex."""
        if self.is_void:
            return None
        if self.is_irrelevant:
            return -1
        return max(popcount(f) for f in self.facets) - 1

    def has_face(self, face: int) -> bool:
        if self.is_void:
            return False
        if face == 0:
            return True
        return any(not (face & ~f) for f in self.facets)

    def faces(self) -> Set[int]:
        if self.is_void:
            return set()
        result = {0}
        for f in self.facets:
            result.update(iter_submasks(f))
        return result

    def nonempty_faces(self) -> Set[int]:
        return self.faces() - {0}

    def is_cone(self) -> Optional[int]:
        """An apex vertex contained in every facet, or None."""
        if self.kind is not Kind.PROPER:
            return None
        common = full_mask(self.n)
        for f in self.facets:
            common &= f
        if not common:
            return None
        return (common & -common).bit_length() - 1

    def restrict(self, vertices: int) -> "SimplicialComplex":
        """Induced subcomplex on `vertices`."""
        if self.is_void:
            return self
        return SimplicialComplex.from_faces(self.n, [f & vertices for f in self.facets] or [0])

    def facet_lists(self) -> List[List[int]]:
        """Facets as sorted 1-based vertex lists, in canonical order."""
        return sorted([i + 1 for i in from_mask(f)] for f in self.facets)

    def __str__(self) -> str:
        if self.kind is not Kind.PROPER:
            return f"<{self.kind.value}>"
        return "<" + ", ".join("{" + ",".join(map(str, f)) + "}" for f in self.facet_lists()) + ">"


def _same_ground(a: SimplicialComplex, b: SimplicialComplex) -> None:
    if a.n != b.n:
        raise DimensionMismatchError(f"complexes live on {a.n} and {b.n} vertices")


def join(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    _same_ground(a, b)
    if a.vertices() & b.vertices():
        raise DomainError("join of complexes with overlapping vertex sets")
    if a.is_void or b.is_void:
        return SimplicialComplex.void(a.n)
    if a.is_irrelevant:
        return b
    if b.is_irrelevant:
        return a
    return SimplicialComplex(a.n, Kind.PROPER, maximal_masks(f | g for f in a.facets for g in b.facets))


def union(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    _same_ground(a, b)
    if a.is_void:
        return b
    if b.is_void:
        return a
    return SimplicialComplex.from_faces(a.n, a.facets + b.facets + (0,))


def intersect(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    _same_ground(a, b)
    if a.is_void or b.is_void:
        return SimplicialComplex.void(a.n)
    return SimplicialComplex.from_faces(a.n, [f & g for f in a.facets for g in b.facets] + [0])


def union_all(n: int, complexes: Iterable[SimplicialComplex]) -> SimplicialComplex:
    result = SimplicialComplex.void(n)
    for c in complexes:
        result = union(result, c)
    return result
