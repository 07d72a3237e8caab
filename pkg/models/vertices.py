"""Vertex sets of [n] stored as integer bitmasks (bit i is variable x_{i+1})."""
from typing import Iterable, Iterator, List

MAX_VARIABLES = 24


def to_mask(indices: Iterable[int]) -> int:
    """Bitmask of 0-based indices."""
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def from_mask(mask: int) -> List[int]:
    """Sorted 0-based indices of a bitmask."""
    indices = []
    i = 0
    while mask:
        if mask & 1:
            indices.append(i)
        mask >>= 1
        i += 1
    return indices


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def full_mask(n: int) -> int:
    return (1 << n) - 1


def iter_submasks(mask: int) -> Iterator[int]:
    """Every submask of `mask`, the mask itself first and 0 last."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask
