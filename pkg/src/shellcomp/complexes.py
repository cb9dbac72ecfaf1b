"""Pure simplicial complexes on small ground sets.

A :class:`Complex` stores an explicit ground set together with the facet
set, both as label bit masks (see :mod:`shellcomp.faces`).  The ground set
is explicit so that *loops* -- ground elements contained in no face -- are
representable; several constructions below (links of faces, deletions)
produce them and the decomposing-order machinery depends on them.

Two degenerate complexes are distinguished: the *void* complex has no
faces at all (empty facet set), while the *empty* complex has the single
facet ``{}``.  Both are valid values everywhere.

All values are immutable; every operation is a pure function of its
inputs, so concurrent use needs no synchronization.

Purity (all facets of equal cardinality) is enforced on user-facing
construction.  Internal operations such as :meth:`Complex.deletion` may
legitimately return a non-pure complex; callers that need purity check
:attr:`Complex.is_pure`.
"""

from __future__ import annotations

import math
from collections.abc import Iterable
from dataclasses import dataclass

from .errors import DomainError
from .faces import face_text, ksubsets_colex, labels_of, mask_of


def as_face(face) -> int:
    """Accept a face given as a ready bit mask or as an iterable of labels."""
    if isinstance(face, int):
        return face
    return mask_of(face)


def _antichain(candidates: Iterable[int]) -> frozenset[int]:
    """Inclusion-maximal elements of a family of faces."""
    by_size = sorted(set(candidates), key=lambda m: m.bit_count(), reverse=True)
    keep: list[int] = []
    for m in by_size:
        if not any(m & k == m for k in keep):
            keep.append(m)
    return frozenset(keep)


@dataclass(frozen=True)
class Complex:
    """A simplicial complex given by its ground set and facet masks.

    ``facets`` is an inclusion-antichain; the complex consists of all
    subsets of its members.  Construct through :meth:`from_facets` unless
    the masks are already known to be well formed.
    """

    ground: int
    facets: frozenset[int]

    def __post_init__(self):
        for f in self.facets:
            if f & ~self.ground:
                raise DomainError(
                    f"facet {face_text(f)} not contained in ground set"
                )

    # -- construction ----------------------------------------------------

    @staticmethod
    def from_facets(facets, ground=None, *, require_pure: bool = True) -> "Complex":
        """Build a complex from facets given as iterables of labels.

        ``ground`` may be an int ``n`` (meaning labels ``1..n``), an
        iterable of labels, or ``None`` to use the union of the facets.
        Mixed facet cardinalities are rejected when ``require_pure`` is
        set, with a diagnostic naming two offending sizes.
        """
        masks = [as_face(f) for f in facets]
        if require_pure and masks:
            sizes = {m.bit_count() for m in masks}
            if len(sizes) > 1:
                a, b = sorted(sizes)[:2]
                raise DomainError(
                    f"not pure: facets of cardinality {a} and {b} both present"
                )
        if ground is None:
            g = 0
            for m in masks:
                g |= m
            if not masks:
                raise DomainError("void complex needs an explicit ground set")
        elif isinstance(ground, int):
            if not 1 <= ground <= 64:
                raise DomainError(f"ground set size {ground} outside 1..64")
            g = (1 << ground) - 1
        else:
            g = mask_of(ground)
        return Complex(g, _antichain(masks))

    @staticmethod
    def void(ground) -> "Complex":
        """The void complex (no faces) on the given ground set."""
        g = (1 << ground) - 1 if isinstance(ground, int) else mask_of(ground)
        return Complex(g, frozenset())

    @staticmethod
    def empty(ground) -> "Complex":
        """The empty complex ``{{}}`` on the given ground set."""
        g = (1 << ground) - 1 if isinstance(ground, int) else mask_of(ground)
        return Complex(g, frozenset({0}))

    # -- basic queries ----------------------------------------------------

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def is_empty_complex(self) -> bool:
        return self.facets == frozenset({0})

    @property
    def is_simplex(self) -> bool:
        """Single-facet complexes count as simplices, the void and empty
        complexes included; loops in the ground set are irrelevant."""
        return len(self.facets) <= 1

    @property
    def dim(self) -> int | None:
        """Dimension, or ``None`` for the void complex."""
        if not self.facets:
            return None
        return max(f.bit_count() for f in self.facets) - 1

    @property
    def is_pure(self) -> bool:
        return len({f.bit_count() for f in self.facets}) <= 1

    @property
    def vertices(self) -> int:
        """Mask of ground elements that appear in some face."""
        v = 0
        for f in self.facets:
            v |= f
        return v

    @property
    def loops(self) -> int:
        """Mask of ground elements that appear in no face."""
        return self.ground & ~self.vertices

    def vertex_labels(self) -> tuple[int, ...]:
        return labels_of(self.vertices)

    def loop_labels(self) -> tuple[int, ...]:
        return labels_of(self.loops)

    def facet_list(self) -> tuple[int, ...]:
        """Facets sorted by mask (= colex order under natural labels)."""
        return tuple(sorted(self.facets))

    def has_face(self, face) -> bool:
        f = as_face(face)
        return any(f & g == f for g in self.facets)

    def all_faces(self) -> set[int]:
        """Every face, the empty face included (absent only for void)."""
        out: set[int] = set()
        stack = list(self.facets)
        for f in self.facets:
            out.add(f)
        while stack:
            m = stack.pop()
            low = m
            while low:
                b = low & -low
                low ^= b
                sub = m ^ b
                if sub not in out:
                    out.add(sub)
                    stack.append(sub)
        if self.facets:
            out.add(0)
        return out

    # -- the three fundamental constructions ------------------------------

    def link(self, face) -> "Complex":
        """Faces disjoint from ``face`` whose union with it is a face.

        The result lives on ground set ``V \\ face``.
        """
        f = as_face(face)
        if not self.has_face(f):
            raise DomainError(f"face {face_text(f)} not in complex")
        new = _antichain(g ^ f for g in self.facets if g & f == f)
        return Complex(self.ground & ~f, new)

    def star(self, face) -> "Complex":
        """The complex generated by the facets containing ``face``."""
        f = as_face(face)
        if not self.has_face(f):
            raise DomainError(f"face {face_text(f)} not in complex")
        return Complex(self.ground, frozenset(g for g in self.facets if g & f == f))

    def deletion(self, face) -> "Complex":
        """All faces not containing ``face``.

        Deleting a single vertex removes it from the ground set; deleting
        a larger face keeps the ground set (the faces that meet it
        partially survive).  The result need not be pure -- callers that
        care must check.
        """
        f = as_face(face)
        if f == 0:
            raise DomainError("cannot delete the empty face")
        if f & ~self.ground:
            raise DomainError(f"face {face_text(f)} not within ground set")
        keep = [g for g in self.facets if g & f != f]
        trunc = []
        for g in self.facets:
            if g & f == f:
                rest = f
                while rest:
                    b = rest & -rest
                    rest ^= b
                    trunc.append(g ^ b)
        ground = self.ground & ~f if f.bit_count() == 1 else self.ground
        return Complex(ground, _antichain(keep + trunc))

    # -- fullness and editing ---------------------------------------------

    def is_full(self, over=None) -> bool:
        """True when every ``(dim+1)``-subset of ``over`` is a facet.

        ``over`` defaults to the ground set.  The void complex is never
        full; the empty complex is (its only possible facet is present).
        """
        if not self.is_pure:
            raise DomainError("fullness is defined for pure complexes")
        if self.dim is None:
            return False
        over_mask = self.ground if over is None else as_face(over)
        k = self.dim + 1
        inside = sum(1 for f in self.facets if f & over_mask == f)
        return inside == math.comb(over_mask.bit_count(), k)

    def with_facet(self, face) -> "Complex":
        """Add one facet of the current top dimension; returns a new value."""
        f = as_face(face)
        if f in self.facets:
            return self
        if self.dim is not None and f.bit_count() != self.dim + 1:
            raise DomainError(
                f"facet {face_text(f)} has cardinality {f.bit_count()}, "
                f"expected {self.dim + 1}"
            )
        if f & ~self.ground:
            raise DomainError(f"facet {face_text(f)} not within ground set")
        return Complex(self.ground, self.facets | {f})

    def with_ground(self, ground_mask: int) -> "Complex":
        """Same facets on a different ground set (used to drop loops)."""
        return Complex(ground_mask, self.facets)

    def __repr__(self):  # pragma: no cover - debugging aid
        fs = ", ".join("".join(map(str, labels_of(f))) or "{}" for f in self.facet_list())
        return f"Complex[{fs} | ground {''.join(map(str, labels_of(self.ground)))}]"


def skeleton(n: int, d: int) -> Complex:
    """The d-skeleton of the (n-1)-simplex: all (d+1)-subsets of [n]."""
    if not 1 <= n <= 64:
        raise DomainError(f"ground set size {n} outside 1..64")
    if not 0 <= d <= n - 1:
        raise DomainError(f"dimension {d} outside 0..{n - 1}")
    facets = frozenset(ksubsets_colex(n, d + 1))
    return Complex((1 << n) - 1, facets)


def cone(cx: Complex, apex: int) -> Complex:
    """Cone over a complex: every facet gains the apex vertex."""
    b = 1 << (apex - 1)
    if cx.ground & b:
        raise DomainError(f"apex {apex} already in ground set")
    if cx.is_void:
        return Complex(cx.ground | b, frozenset({b}))
    return Complex(cx.ground | b, frozenset(f | b for f in cx.facets))


def adjacent(f, g) -> bool:
    """Two equal-size facets are adjacent when they differ by one vertex."""
    fm, gm = as_face(f), as_face(g)
    if fm.bit_count() != gm.bit_count():
        raise DomainError("adjacency is defined for equal-cardinality facets")
    return (fm & gm).bit_count() == fm.bit_count() - 1
