"""Finite topological spaces as immutable values with exact set operators.

A space lives on the ground set {0..n-1}. Subsets are exposed as frozensets
of indices and carried internally as integer bitmasks, which keeps every
operator an auditable one-liner over machine words. All values are immutable
after construction; every derived quantity (minimal neighborhoods, the open
family itself) is computed eagerly in ``__init__`` so instances are safe to
share across threads.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator

from .errors import (
    EmptySubspace,
    IndexOutOfRange,
    MissingEmptyOrFull,
    NotClosedUnderIntersection,
    NotClosedUnderUnion,
)

PointSet = frozenset[int]


def mask_of(points: Iterable[int], n: int) -> int:
    """Encode a subset of {0..n-1} as a bitmask, validating every index."""
    m = 0
    for p in points:
        if not 0 <= p < n:
            raise IndexOutOfRange(f"point {p} outside ground set of size {n}")
        m |= 1 << p
    return m


def set_of(mask: int) -> PointSet:
    """Decode a bitmask back into a frozenset of indices."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return frozenset(out)


def iter_bits(mask: int) -> Iterator[int]:
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


class Topology:
    """A validated family of open sets on the ground set {0..n-1}.

    The family must contain the empty and full sets and be closed under
    pairwise union and intersection (at finite scale this is closure under
    arbitrary unions and intersections). Duplicates in the input family are
    canonicalized away; the stored family is sorted by mask value.
    """

    __slots__ = ("n", "full_mask", "open_masks", "_open_set", "_min_nbhd")

    def __init__(self, n: int, opens: Iterable[Iterable[int]]):
        if n < 1:
            raise ValueError("ground set must have at least one point")
        self.n = n
        self.full_mask = (1 << n) - 1
        masks = sorted({m if isinstance(m, int) else mask_of(m, n) for m in opens})
        for m in masks:
            if m < 0 or m > self.full_mask:
                raise IndexOutOfRange(f"open {m:#x} outside ground set of size {n}")
        mask_set = frozenset(masks)
        if 0 not in mask_set or self.full_mask not in mask_set:
            raise MissingEmptyOrFull(
                f"open family on {n} points must contain the empty and full sets"
            )
        for a, b in itertools.combinations(masks, 2):
            if a | b not in mask_set:
                raise NotClosedUnderUnion(set_of(a), set_of(b))
            if a & b not in mask_set:
                raise NotClosedUnderIntersection(set_of(a), set_of(b))
        self.open_masks: tuple[int, ...] = tuple(masks)
        self._open_set = mask_set
        # Finite spaces are Alexandrov: each point has a smallest open
        # neighborhood, precomputed here to keep instances immutable.
        nbhd = []
        for x in range(n):
            bit = 1 << x
            acc = self.full_mask
            for m in masks:
                if m & bit:
                    acc &= m
            nbhd.append(acc)
        self._min_nbhd = tuple(nbhd)

    # -- canonical identity -------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Topology)
            and self.n == other.n
            and self.open_masks == other.open_masks
        )

    def __hash__(self):
        return hash((self.n, self.open_masks))

    def __repr__(self):
        fam = ",".join("{" + ",".join(map(str, sorted(set_of(m)))) + "}" for m in self.open_masks)
        return f"Topology(n={self.n}, opens=[{fam}])"

    @property
    def opens(self) -> tuple[PointSet, ...]:
        return tuple(set_of(m) for m in self.open_masks)

    # -- mask-level operators (fast path used throughout the package) -------

    def to_mask(self, points: Iterable[int] | int) -> int:
        if isinstance(points, int):
            if points < 0 or points > self.full_mask:
                raise IndexOutOfRange(f"mask {points:#x} outside ground set of size {self.n}")
            return points
        return mask_of(points, self.n)

    def is_open_mask(self, m: int) -> bool:
        return m in self._open_set

    def interior_mask(self, a: int) -> int:
        # Union of all opens contained in a.
        acc = 0
        for m in self.open_masks:
            if m & a == m:
                acc |= m
        return acc

    def closure_mask(self, a: int) -> int:
        # Smallest closed superset, via the complement duality.
        return self.full_mask ^ self.interior_mask(self.full_mask ^ a)

    def regularize_mask(self, a: int) -> int:
        return self.interior_mask(self.closure_mask(a))

    def is_regular_open_mask(self, m: int) -> bool:
        return m in self._open_set and self.regularize_mask(m) == m

    def regular_open_masks(self) -> tuple[int, ...]:
        return tuple(m for m in self.open_masks if self.regularize_mask(m) == m)

    # -- public set-level operators -----------------------------------------

    def is_open(self, a: Iterable[int]) -> bool:
        return self.to_mask(a) in self._open_set

    def interior(self, a: Iterable[int]) -> PointSet:
        """Largest open subset of ``a``."""
        return set_of(self.interior_mask(self.to_mask(a)))

    def closure(self, a: Iterable[int]) -> PointSet:
        """Smallest closed superset of ``a``."""
        return set_of(self.closure_mask(self.to_mask(a)))

    def regularize(self, a: Iterable[int]) -> PointSet:
        """interior(closure(a)); idempotent on opens, fixed exactly on regular opens."""
        return set_of(self.regularize_mask(self.to_mask(a)))

    def is_regular_open(self, a: Iterable[int]) -> bool:
        return self.is_regular_open_mask(self.to_mask(a))

    def regular_opens(self) -> tuple[PointSet, ...]:
        return tuple(set_of(m) for m in self.regular_open_masks())

    def is_dense(self, y: Iterable[int]) -> bool:
        return self.closure_mask(self.to_mask(y)) == self.full_mask

    def minimal_neighborhood(self, x: int) -> PointSet:
        """Intersection of all opens containing ``x``: the least open around it."""
        if not 0 <= x < self.n:
            raise IndexOutOfRange(f"point {x} outside ground set of size {self.n}")
        return set_of(self._min_nbhd[x])

    def minimal_neighborhood_mask(self, x: int) -> int:
        if not 0 <= x < self.n:
            raise IndexOutOfRange(f"point {x} outside ground set of size {self.n}")
        return self._min_nbhd[x]

    def subspace(self, y: Iterable[int]) -> tuple["Topology", dict[int, int]]:
        """Inherited topology on ``y``, re-indexed to {0..|y|-1}.

        Returns the subspace together with the map ambient point -> new index.
        """
        ymask = self.to_mask(y)
        if ymask == 0:
            raise EmptySubspace("cannot take the subspace on the empty set")
        points = sorted(iter_bits(ymask))
        index_map = {p: i for i, p in enumerate(points)}
        traces = {self._compress(m & ymask, points) for m in self.open_masks}
        return Topology(len(points), traces), index_map

    @staticmethod
    def _compress(mask: int, points: list[int]) -> int:
        out = 0
        for i, p in enumerate(points):
            if mask >> p & 1:
                out |= 1 << i
        return out


# -- standard fixtures used across tests, demos and docs ---------------------


def discrete(n: int) -> Topology:
    """Every subset open."""
    return Topology(n, range(1 << n))


def indiscrete(n: int) -> Topology:
    """Only the empty and full sets open."""
    return Topology(n, (0, (1 << n) - 1))


def sierpinski() -> Topology:
    """Two points with opens {}, {0}, {0,1}."""
    return Topology(2, (0b00, 0b01, 0b11))


def x3() -> Topology:
    """Three points: two open singletons plus a point in the closure of both."""
    return Topology(3, (0b000, 0b001, 0b010, 0b011, 0b111))


# -- homeomorphism search -----------------------------------------------------


def permute_mask(mask: int, perm: tuple[int, ...]) -> int:
    """Relabel the points of ``mask`` through ``perm`` (old index -> new index)."""
    out = 0
    for i, target in enumerate(perm):
        if mask >> i & 1:
            out |= 1 << target
    return out


def _point_signature(t: Topology, x: int) -> tuple:
    containing = [m for m in t.open_masks if m >> x & 1]
    return (
        t._min_nbhd[x].bit_count(),
        len(containing),
        tuple(sorted(m.bit_count() for m in containing)),
        t.closure_mask(1 << x).bit_count(),
    )


def find_homeomorphism(t1: Topology, t2: Topology) -> dict[int, int] | None:
    """Point bijection carrying opens onto opens, or None if there is none.

    Decision procedure: invariant pre-filters (open count, open-size
    multiset, minimal-neighborhood size multiset), then backtracking over
    point images restricted to matching point signatures. Returns the
    lexicographically first bijection found.
    """
    if t1.n != t2.n or len(t1.open_masks) != len(t2.open_masks):
        return None
    if sorted(m.bit_count() for m in t1.open_masks) != sorted(
        m.bit_count() for m in t2.open_masks
    ):
        return None
    if sorted(m.bit_count() for m in t1._min_nbhd) != sorted(
        m.bit_count() for m in t2._min_nbhd
    ):
        return None
    n = t1.n
    sig1 = [_point_signature(t1, x) for x in range(n)]
    sig2 = [_point_signature(t2, x) for x in range(n)]
    if sorted(sig1) != sorted(sig2):
        return None
    target_set = set(t2.open_masks)

    perm: list[int] = [-1] * n
    used = [False] * n

    def backtrack(x: int) -> bool:
        if x == n:
            image = {permute_mask(m, tuple(perm)) for m in t1.open_masks}
            return image == target_set
        for y in range(n):
            if not used[y] and sig1[x] == sig2[y]:
                perm[x] = y
                used[y] = True
                if backtrack(x + 1):
                    return True
                used[y] = False
                perm[x] = -1
        return False

    if backtrack(0):
        return {i: perm[i] for i in range(n)}
    return None


def homeomorphic(t1: Topology, t2: Topology) -> bool:
    return find_homeomorphism(t1, t2) is not None


def canonical_open_masks(t: Topology) -> tuple[int, ...]:
    """Minimum lexicographic encoding of the open family over all relabelings.

    Two spaces are homeomorphic iff their canonical encodings agree; the
    n! scan is affordable at the n <= 5 scale this package targets.
    """
    best = None
    for perm in itertools.permutations(range(t.n)):
        enc = tuple(sorted(permute_mask(m, perm) for m in t.open_masks))
        if best is None or enc < best:
            best = enc
    assert best is not None
    return best
