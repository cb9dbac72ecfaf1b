"""Reverse-lexicographic order on equal-size subsets, and shiftedness.

A k-set A is revlex smaller than B when the largest element on which they
differ belongs to B.  After re-indexing labels by their rank in a linear
order this is plain integer comparison of the rank masks, so iteration in
revlex order is Gosper's hack over rank space.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .complexes import Complex, as_face
from .errors import DomainError
from .faces import ksubsets_colex, labels_of, mask_of


@dataclass(frozen=True)
class LinearOrder:
    """A linear order on a ground set: ``labels[0]`` is smallest."""

    labels: tuple[int, ...]

    def __post_init__(self):
        if len(set(self.labels)) != len(self.labels):
            raise DomainError("order repeats a label")
        object.__setattr__(self, "labels", tuple(self.labels))

    @staticmethod
    def natural(ground) -> "LinearOrder":
        g = as_face(ground) if not isinstance(ground, int) else ground
        return LinearOrder(labels_of(g))

    @staticmethod
    def of(*labels: int) -> "LinearOrder":
        return LinearOrder(tuple(labels))

    @cached_property
    def ground(self) -> int:
        return mask_of(self.labels)

    @cached_property
    def _rank_bit(self) -> dict[int, int]:
        return {v: 1 << i for i, v in enumerate(self.labels)}

    def rank_of(self, label: int) -> int:
        """0-based rank; 0 is the smallest element."""
        return self._rank_bit[label].bit_length() - 1

    def to_rank_mask(self, face_mask: int) -> int:
        rm = 0
        for v in labels_of(face_mask):
            rm |= self._rank_bit[v]
        return rm

    def from_rank_mask(self, rank_mask: int) -> int:
        m = 0
        while rank_mask:
            low = rank_mask & -rank_mask
            rank_mask ^= low
            m |= 1 << (self.labels[low.bit_length() - 1] - 1)
        return m

    def restricted(self, ground_mask: int) -> "LinearOrder":
        """The induced order on a subset of the ground set."""
        return LinearOrder(tuple(v for v in self.labels if ground_mask >> (v - 1) & 1))


def revlex_cmp(a, b, order: LinearOrder) -> int:
    """-1, 0 or 1 as ``a`` is revlex smaller than, equal to or greater
    than ``b`` under ``order``.  Sizes must agree."""
    am, bm = as_face(a), as_face(b)
    if am.bit_count() != bm.bit_count():
        raise DomainError("revlex comparison needs equal-size subsets")
    ra, rb = order.to_rank_mask(am), order.to_rank_mask(bm)
    return (ra > rb) - (ra < rb)


def iter_ksubsets(order: LinearOrder, k: int):
    """All k-subsets of the ordered ground set, revlex ascending, lazily."""
    for rm in ksubsets_colex(len(order.labels), k):
        yield order.from_rank_mask(rm)


def smallest_missing(cx: Complex, order: LinearOrder | None = None) -> int | None:
    """The revlex-minimum (dim+1)-subset of the ground set that is not a
    facet, or ``None`` when the complex is full."""
    if not cx.is_pure:
        raise DomainError("smallest_missing needs a pure complex")
    if cx.dim is None:
        raise DomainError("void complex has no dimension")
    if order is None:
        order = LinearOrder.natural(cx.ground)
    if order.ground != cx.ground:
        raise DomainError("order must range over the ground set")
    for m in iter_ksubsets(order, cx.dim + 1):
        if m not in cx.facets:
            return m
    return None


def is_shifted(cx: Complex, order: LinearOrder | None = None) -> bool:
    """True when replacing any facet element by a smaller one (under
    ``order``) always lands back in the complex.

    For pure complexes facet-level closure is equivalent to closure of all
    faces.  The void and empty complexes are shifted.
    """
    if cx.is_void or cx.is_empty_complex:
        return True
    if order is None:
        order = LinearOrder.natural(cx.ground)
    if order.ground != cx.ground:
        raise DomainError("order must range over the ground set")
    for f in cx.facets:
        for x in labels_of(f):
            xb = 1 << (x - 1)
            for y in order.labels:
                if y == x:
                    break
                yb = 1 << (y - 1)
                if f & yb:
                    continue
                if not cx.has_face((f ^ xb) | yb):
                    return False
    return True
