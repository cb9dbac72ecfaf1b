"""Faces as machine-word bit masks.

Labels are integers 1..64; label ``v`` occupies bit ``v - 1``.  Every set
operation on faces is then a single integer operation, which is what makes
the exhaustive enumeration suites affordable.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator

MAX_LABEL = 64


def mask_of(labels: Iterable[int]) -> int:
    """Pack distinct labels into a bit mask."""
    m = 0
    for v in labels:
        if not 1 <= v <= MAX_LABEL:
            raise ValueError(f"label {v} outside 1..{MAX_LABEL}")
        b = 1 << (v - 1)
        if m & b:
            raise ValueError(f"duplicate label {v}")
        m |= b
    return m


def labels_of(mask: int) -> tuple[int, ...]:
    """Unpack a bit mask into its sorted labels."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return tuple(out)


def face_text(mask: int) -> str:
    if not mask:
        return "{}"
    return " ".join(str(v) for v in labels_of(mask))


def subsets_of(mask: int) -> Iterator[int]:
    """Yield every subset of ``mask``, the empty face included."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def ksubsets_colex(n: int, k: int) -> Iterator[int]:
    """All k-subsets of bit positions 0..n-1 as masks, in colex order.

    Colex (compare by largest differing element) on equal-size masks is
    plain integer order, so Gosper's hack walks it lazily.
    """
    if k < 0 or k > n:
        return
    if k == 0:
        yield 0
        return
    m = (1 << k) - 1
    top = 1 << n
    while m < top:
        yield m
        c = m & -m
        r = m + c
        m = r | (((m ^ r) >> 2) // c)
