"""Subsets of a finite carrier encoded as int bit vectors (bit i <=> point i)."""
from __future__ import annotations

from typing import Iterable, Iterator


def mask_of(points: Iterable[int]) -> int:
    m = 0
    for p in points:
        m |= 1 << p
    return m


def bits_of(mask: int) -> tuple[int, ...]:
    """Members of the subset, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def full_mask(n: int) -> int:
    return (1 << n) - 1


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def subset_key(mask: int) -> tuple[int, int]:
    """Canonical sort key for subsets: cardinality first, then numeric value."""
    return (mask.bit_count(), mask)


def canonical_subsets(masks: Iterable[int]) -> tuple[int, ...]:
    """Deduplicate and sort a family of subsets into canonical order."""
    return tuple(sorted(set(masks), key=subset_key))
