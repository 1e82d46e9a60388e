"""Small helpers for sets represented as integer bitmasks.

Bit i of an object mask stands for object index i; likewise for
attributes.  Python integers are arbitrary width, so these work for any
context size.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def bits(mask: int) -> Iterator[int]:
    """Yield set bit positions in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def set_of(mask: int) -> frozenset[int]:
    return frozenset(bits(mask))


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def member_vector(mask: int, width: int) -> tuple[int, ...]:
    """0/1 membership tuple, index 0 first; used for lexicographic ties."""
    return tuple((mask >> i) & 1 for i in range(width))
