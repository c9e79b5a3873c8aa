"""Exhaustive enumeration of topologies on small ground sets.

Three independent generation routes are provided:

* ``enumerate_topologies`` -- the production generator. Breadth-first walk
  of the lattice of union/intersection-closed families: starting from the
  trivial family, each reachable closed family is extended by one new subset
  and re-closed. Every closed family is reachable this way (add its members
  one at a time and close after each).
* ``brute_force_topologies`` -- the oracle: literally filter every family of
  subsets containing the empty and full sets. Feasible through n = 4
  (2**14 candidate families); guarded there.
* ``preorder_topologies`` -- a second independent route: finite spaces
  correspond exactly to preorders (every finite space is Alexandrov), so
  enumerating reflexive transitive relations and taking their up-set
  families regenerates all topologies.

Labeled counts are 1, 4, 29, 355, 6942 for n = 1..5; counts up to
homeomorphism are 1, 3, 9, 33, 139.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .errors import SizeGuardExceeded
from .topology import Topology, canonical_open_masks

MODES = ("all", "up-to-homeomorphism")
HARD_GUARD = 5


@dataclass(frozen=True)
class EnumerationSpec:
    """What to enumerate: ground size, labeled-vs-classes, optional cap.

    n = 5 costs seconds and is allowed only with the explicit flag; n > 5 is
    refused outright.
    """

    n: int
    mode: str = "all"
    limit: int | None = None
    allow_n5: bool = False

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")
        if self.n < 1:
            raise ValueError("ground set must have at least one point")
        if self.n > HARD_GUARD:
            raise SizeGuardExceeded(f"enumeration is guarded at n <= {HARD_GUARD}")
        if self.n == HARD_GUARD and not self.allow_n5:
            raise SizeGuardExceeded("n = 5 enumeration requires the explicit allow_n5 flag")


def _close_family(family: frozenset[int], seed: int) -> frozenset[int]:
    """Close an already-closed family extended by one new subset."""
    members = set(family)
    frontier = [seed]
    members.add(seed)
    while frontier:
        nxt = []
        for a in frontier:
            for b in list(members):
                for c in (a | b, a & b):
                    if c not in members:
                        members.add(c)
                        nxt.append(c)
        frontier = nxt
    return frozenset(members)


def _closed_families(n: int) -> list[tuple[int, ...]]:
    full = (1 << n) - 1
    base = frozenset((0, full))
    seen = {base}
    queue = [base]
    while queue:
        fam = queue.pop()
        for s in range(full + 1):
            if s in fam:
                continue
            grown = _close_family(fam, s)
            if grown not in seen:
                seen.add(grown)
                queue.append(grown)
    return sorted((tuple(sorted(f)) for f in seen), key=lambda f: (len(f), f))


def enumerate_topologies(spec: EnumerationSpec) -> Iterator[Topology]:
    """Stream every topology on {0..n-1}, each exactly once, in a fixed
    deterministic order (by open count, then family encoding). In
    up-to-homeomorphism mode, one canonical representative per class."""
    families = _closed_families(spec.n)
    if spec.mode == "up-to-homeomorphism":
        reps = sorted(
            {canonical_open_masks(Topology(spec.n, fam)) for fam in families},
            key=lambda f: (len(f), f),
        )
        families = reps
    count = 0
    for fam in families:
        if spec.limit is not None and count >= spec.limit:
            return
        count += 1
        yield Topology(spec.n, fam)


def brute_force_topologies(n: int) -> list[Topology]:
    """Oracle: filter all 2**(2**n - 2) families containing {} and the full set.

    Independent of the incremental generator; guarded at n <= 4 where the
    candidate space is still only 16384 families.
    """
    if n < 1:
        raise ValueError("ground set must have at least one point")
    if n > 4:
        raise SizeGuardExceeded("brute-force enumeration is guarded at n <= 4")
    full = (1 << n) - 1
    middle = [s for s in range(1, full)]
    out = []
    for picks in range(1 << len(middle)):
        fam = [0, full] + [s for i, s in enumerate(middle) if picks >> i & 1]
        fam_set = set(fam)
        ok = True
        for a, b in itertools.combinations(fam, 2):
            if a | b not in fam_set or a & b not in fam_set:
                ok = False
                break
        if ok:
            out.append(Topology(n, fam))
    return sorted(out, key=lambda t: (len(t.open_masks), t.open_masks))


def preorder_topologies(n: int) -> list[Topology]:
    """Second independent route: up-set families of all preorders on n points."""
    if n < 1:
        raise ValueError("ground set must have at least one point")
    if n > 4:
        raise SizeGuardExceeded("preorder enumeration is guarded at n <= 4")
    off_diag = [(i, j) for i in range(n) for j in range(n) if i != j]
    families = set()
    for picks in range(1 << len(off_diag)):
        succ = [1 << i for i in range(n)]
        for k, (i, j) in enumerate(off_diag):
            if picks >> k & 1:
                succ[i] |= 1 << j
        if any(
            succ[i] >> j & 1 and succ[j] & ~succ[i] for i in range(n) for j in range(n)
        ):
            continue  # not transitive
        opens = tuple(
            sorted(
                u
                for u in range(1 << n)
                if all(succ[i] & ~u == 0 for i in range(n) if u >> i & 1)
            )
        )
        families.add(opens)
    return sorted(
        (Topology(n, f) for f in families),
        key=lambda t: (len(t.open_masks), t.open_masks),
    )


def enumerate_dense_subsets(t: Topology) -> list[frozenset[int]]:
    """All nonempty subsets with full closure, in ascending mask order."""
    return [
        frozenset(i for i in range(t.n) if y >> i & 1)
        for y in range(1, t.full_mask + 1)
        if t.closure_mask(y) == t.full_mask
    ]


def canonical_classes(max_n: int, allow_n5: bool = False) -> list[Topology]:
    """Canonical representatives of all homeomorphism classes with n <= max_n,
    ordered by (n, open count, family encoding)."""
    out = []
    for n in range(1, max_n + 1):
        spec = EnumerationSpec(n, mode="up-to-homeomorphism", allow_n5=allow_n5)
        out.extend(enumerate_topologies(spec))
    return out
