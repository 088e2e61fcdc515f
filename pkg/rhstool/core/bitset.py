"""Integer bit sets over dense ids.

Every vertex set and index set in the package is a plain ``int`` whose bit
``k`` is set when dense id ``k`` is a member. Python integers are unbounded,
so no width has to be chosen up front.
"""

from typing import Iterable, Iterator, List


def bit(k: int) -> int:
    """Return the singleton set ``{k}``."""
    if k < 0:
        raise ValueError(f"bit not greater than or equal to 0, bit == {k}")
    return 1 << k


def mask_of(ids: Iterable[int]) -> int:
    """Build a set from an iterable of dense ids."""
    mask = 0
    for k in ids:
        mask |= bit(k)
    return mask


def full(n: int) -> int:
    """Return ``{0, ..., n-1}``."""
    return (1 << n) - 1


def iter_bits(mask: int) -> Iterator[int]:
    """Iterate the members of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def members(mask: int) -> List[int]:
    return list(iter_bits(mask))


def popcount(mask: int) -> int:
    return mask.bit_count()


def lowest(mask: int) -> int:
    """Smallest member of a non-empty set."""
    if not mask:
        raise ValueError("lowest() of an empty set")
    return (mask & -mask).bit_length() - 1


def contains(mask: int, k: int) -> bool:
    return (mask >> k) & 1 == 1


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def subsets(mask: int) -> Iterator[int]:
    """Iterate every subset of ``mask``, starting with the empty set."""
    sub = 0
    while True:
        yield sub
        if sub == mask:
            return
        sub = (sub - mask) & mask
