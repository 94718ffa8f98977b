from collections.abc import Iterable
from typing import Iterator, List

import six


def is_iterable_not_string(obj):
    return isinstance(obj, Iterable) and not isinstance(obj, six.string_types)


def mask_from_members(members: Iterable) -> int:
    "Bitmask with bit i set for every index i in members."
    mask = 0
    for i in members:
        mask |= 1 << i
    return mask


def iter_bits(mask: int) -> Iterator[int]:
    "Yield the indices of the set bits of mask in increasing order."
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def members_of(mask: int) -> List[int]:
    return list(iter_bits(mask))


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def mask_sort_key(mask: int):
    "Coalition ordering by (size, bit pattern)."
    return (popcount(mask), mask)
