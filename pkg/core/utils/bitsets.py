"""
@description: Vertex-set bitmask helpers. Vertex v (1-based) lives in bit v-1.
"""
from typing import Iterable, Iterator

VertexSet = tuple[int, ...]


def bit(v: int) -> int:
    return 1 << (v - 1)


def full_mask(n: int) -> int:
    return (1 << n) - 1


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << (v - 1)
    return mask


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the vertices of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length()
        mask ^= low


def from_mask(mask: int) -> VertexSet:
    return tuple(iter_bits(mask))


def popcount(mask: int) -> int:
    return bin(mask).count("1")
