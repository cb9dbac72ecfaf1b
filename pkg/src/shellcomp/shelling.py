"""Shelling verification and search.

A shelling of a pure d-complex is an ordering of its facets in which each
facet meets the union of its predecessors in a pure (d-1)-dimensional
complex.  The step condition for a new facet depends only on the *set* of
earlier facets, which the search exploits twice: failed facet subsets are
memoized, and extendable-shellability reduces to a reachability problem on
facet subsets.

The worst case is exponential; these routines are meant for desk-scale
facet counts (the CLI enforces a guard).
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import Complex, as_face
from .errors import DomainError, InvalidPrefix
from .faces import face_text


@dataclass(frozen=True)
class ShellingFailure:
    """Where and why a candidate shelling breaks.

    ``index`` is the 1-based position k >= 2 of the offending facet;
    ``witness`` is an inclusion-maximal face of the intersection with the
    earlier facets whose dimension is not d-1.
    """

    index: int
    witness: int

    def __str__(self):
        return (
            f"step {self.index}: maximal intersection face "
            f"{face_text(self.witness)} has the wrong dimension"
        )


def _step_failure(previous: list[int], new: int, d: int) -> int | None:
    """Witness for a failing shelling step, or None if the step is fine.

    The complex generated by the intersection of ``new`` with the earlier
    facets is pure of dimension d-1 exactly when every inclusion-maximal
    intersection ``F_i & new`` has cardinality d.
    """
    inters = {f & new for f in previous}
    for m in inters:
        if any(m != o and m & o == m for o in inters):
            continue  # not inclusion-maximal
        if m.bit_count() != d:
            return m
    return None


def _as_sequence(cx: Complex, seq) -> list[int]:
    return [as_face(f) for f in seq]


def verify_shelling(cx: Complex, seq) -> ShellingFailure | None:
    """Check a full shelling candidate; ``None`` means it is a shelling.

    ``seq`` must be a permutation of the facet set (anything else is a
    caller bug and raises), including the trivial sequences of the void
    and empty complexes.
    """
    masks = _as_sequence(cx, seq)
    if len(masks) != len(cx.facets) or set(masks) != set(cx.facets) or len(
        set(masks)
    ) != len(masks):
        raise DomainError("sequence is not a permutation of the facet set")
    return verify_partial(cx, masks)


def verify_partial(cx: Complex, seq) -> ShellingFailure | None:
    """Check a prefix of a shelling (a shelling of the subcomplex its
    entries generate)."""
    masks = _as_sequence(cx, seq)
    if len(set(masks)) != len(masks):
        raise DomainError("sequence repeats a facet")
    for m in masks:
        if m not in cx.facets:
            raise DomainError(f"{face_text(m)} is not a facet of the complex")
    if len(masks) <= 1:
        return None
    d = cx.dim
    for k in range(1, len(masks)):
        w = _step_failure(masks[:k], masks[k], d)
        if w is not None:
            return ShellingFailure(k + 1, w)
    return None


class _StepTable:
    """Precomputed step tests for one facet list.

    ``dom[c][i]`` is a bitmask over facet indices j with
    ``|F_j & F_c| = d`` and ``F_i & F_c`` contained in ``F_j & F_c``; the
    step condition for adding F_c after the set S is that every i in S has
    a dominator j in S.
    """

    def __init__(self, facets: list[int], d: int):
        self.facets = facets
        self.d = d
        n = len(facets)
        self.dom = [[0] * n for _ in range(n)]
        for c in range(n):
            inter = [facets[i] & facets[c] for i in range(n)]
            full = [j for j in range(n) if j != c and inter[j].bit_count() == d]
            domc = self.dom[c]
            for i in range(n):
                mi = inter[i]
                acc = 0
                for j in full:
                    if mi & inter[j] == mi:
                        acc |= 1 << j
                domc[i] = acc

    def step_ok(self, used: int, c: int) -> bool:
        domc = self.dom[c]
        u = used
        while u:
            low = u & -u
            u ^= low
            if not domc[low.bit_length() - 1] & used:
                return False
        return True

    def candidates(self, used: int) -> list[int]:
        n = len(self.facets)
        return [
            c for c in range(n) if not used >> c & 1 and self.step_ok(used, c)
        ]

    def boundary_count(self, used: int, c: int) -> int:
        """Number of (d-1)-faces of F_c already present in the prefix."""
        fc = self.facets[c]
        count = 0
        rest = fc
        while rest:
            b = rest & -rest
            rest ^= b
            sub = fc ^ b
            u = used
            while u:
                lo = u & -u
                u ^= lo
                if sub & self.facets[lo.bit_length() - 1] == sub:
                    count += 1
                    break
        return count


def find_shelling(cx: Complex) -> tuple[int, ...] | None:
    """A shelling found by exhaustive backtracking, or ``None``.

    Candidate facets are tried most-connected first (most boundary ridges
    already present), ties broken by revlex under the natural order, so
    the result is deterministic.  Facet subsets that admit no completion
    are memoized and never re-explored.
    """
    if not cx.is_pure:
        raise DomainError("shellability is defined for pure complexes")
    fac = sorted(cx.facets)
    if len(fac) <= 1:
        return tuple(fac)
    st = _StepTable(fac, cx.dim)
    full = (1 << len(fac)) - 1
    dead: set[int] = set()
    order: list[int] = []

    def dfs(used: int) -> bool:
        if used == full:
            return True
        if used in dead:
            return False
        cands = st.candidates(used)
        cands.sort(key=lambda c: (-st.boundary_count(used, c), fac[c]))
        for c in cands:
            order.append(c)
            if dfs(used | 1 << c):
                return True
            order.pop()
        dead.add(used)
        return False

    if dfs(0):
        return tuple(fac[c] for c in order)
    return None


def extend_shelling(cx: Complex, prefix) -> tuple[int, ...] | None:
    """Complete a partial shelling to a full shelling of ``cx``.

    The prefix must itself be a valid partial shelling (else
    :class:`InvalidPrefix` is raised, carrying the failing step).  Returns
    ``None`` when no completion exists.
    """
    if not cx.is_pure:
        raise DomainError("shellability is defined for pure complexes")
    masks = _as_sequence(cx, prefix)
    failure = verify_partial(cx, masks)
    if failure is not None:
        raise InvalidPrefix(failure)
    fac = sorted(cx.facets)
    if len(fac) <= 1:
        return tuple(fac)
    index = {f: i for i, f in enumerate(fac)}
    used0 = 0
    for m in masks:
        used0 |= 1 << index[m]
    st = _StepTable(fac, cx.dim)
    full = (1 << len(fac)) - 1
    dead: set[int] = set()
    order: list[int] = []

    def dfs(used: int) -> bool:
        if used == full:
            return True
        if used in dead:
            return False
        cands = st.candidates(used)
        cands.sort(key=lambda c: (-st.boundary_count(used, c), fac[c]))
        for c in cands:
            order.append(c)
            if dfs(used | 1 << c):
                return True
            order.pop()
        dead.add(used)
        return False

    if dfs(used0):
        return tuple(masks) + tuple(fac[c] for c in order)
    return None


def _subset_machinery(cx: Complex):
    fac = sorted(cx.facets)
    st = _StepTable(fac, cx.dim)
    full = (1 << len(fac)) - 1
    memo: dict[int, bool] = {full: True}

    def can_complete(used: int) -> bool:
        got = memo.get(used)
        if got is None:
            got = any(
                can_complete(used | 1 << c) for c in st.candidates(used)
            )
            memo[used] = got
        return got

    return fac, st, full, can_complete


def is_extendably_shellable(cx: Complex) -> bool:
    """True when every partial shelling extends to a full shelling.

    A partial shelling is determined up to extendability by its facet
    *set*, so the check walks the reachable facet subsets and asks each
    one whether it can still be completed.  Cost is O(2^facets); intended
    for small facet counts.
    """
    if not cx.is_pure:
        raise DomainError("shellability is defined for pure complexes")
    if len(cx.facets) <= 1:
        return True
    fac, st, full, can_complete = _subset_machinery(cx)
    seen = {0}
    frontier = [0]
    while frontier:
        used = frontier.pop()
        if not can_complete(used):
            return False
        for c in st.candidates(used):
            nxt = used | 1 << c
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return True


def find_stuck_prefix(cx: Complex) -> tuple[int, ...] | None:
    """A reachable partial shelling that cannot be completed, or ``None``.

    Serves as the counterexample for non-extendable shellability.
    """
    if not cx.is_pure:
        raise DomainError("shellability is defined for pure complexes")
    if len(cx.facets) <= 1:
        return None
    fac, st, full, can_complete = _subset_machinery(cx)
    parent: dict[int, tuple[int, int]] = {}
    seen = {0}
    queue = [0]
    while queue:
        used = queue.pop(0)
        if not can_complete(used):
            path = []
            cur = used
            while cur:
                prev, c = parent[cur]
                path.append(fac[c])
                cur = prev
            return tuple(reversed(path))
        for c in st.candidates(used):
            nxt = used | 1 << c
            if nxt not in seen:
                seen.add(nxt)
                parent[nxt] = (used, c)
                queue.append(nxt)
    return None
