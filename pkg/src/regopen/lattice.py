"""Finite lattices, the regular-open Boolean algebra of a space, and the
R-lattice axioms with an explicit extra relation.

The extra relation (written ``>>`` in the literature and called
``well_inside`` here, after its topological reading "U contains the closure
of V") is always explicit data: a frozenset of ordered element-index pairs.
It is never inferred from the lattice order, because the whole point of the
axioms is that the same order can carry different admissible relations.

All axiom checks are exhaustive quantifier scans that report the
lexicographically first witness on failure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import NotALattice, VerificationError
from .topology import PointSet, Topology, set_of

PairRelation = frozenset[tuple[int, int]]


class FiniteLattice:
    """Indexed finite lattice: order matrix plus meet/join tables.

    ``up[i]`` and ``down[i]`` are bitmasks over element indices (bit j of
    ``up[i]`` set iff i <= j). Meet and join are the order-theoretic inf and
    sup, computed and cross-checked against the order at construction.
    Elements may carry point-set payloads (used when the lattice arises from
    a topology); payload-free lattices support every order-theoretic check.
    """

    __slots__ = ("m", "up", "down", "meet", "join", "bottom", "payload_masks")

    def __init__(
        self,
        up: Sequence[int],
        meet: Sequence[Sequence[int]],
        join: Sequence[Sequence[int]],
        bottom: int,
        payload_masks: tuple[int, ...] | None = None,
    ):
        self.m = len(up)
        self.up = tuple(up)
        self.down = tuple(
            sum(1 << i for i in range(self.m) if up[i] >> j & 1) for j in range(self.m)
        )
        self.meet = tuple(tuple(row) for row in meet)
        self.join = tuple(tuple(row) for row in join)
        self.bottom = bottom
        self.payload_masks = payload_masks

    @classmethod
    def from_leq(
        cls,
        m: int,
        leq_pairs: Iterable[tuple[int, int]],
        payload_masks: Sequence[int] | None = None,
    ) -> "FiniteLattice":
        """Build from an explicit order relation, validating lattice-hood.

        ``leq_pairs`` lists the ordered pairs (i, j) with i <= j; reflexive
        pairs may be omitted. Raises NotALattice if the relation is not a
        partial order or some pair lacks an inf or sup.
        """
        up = [1 << i for i in range(m)]
        for i, j in leq_pairs:
            if not (0 <= i < m and 0 <= j < m):
                raise NotALattice(f"element index out of range in pair ({i}, {j})")
            up[i] |= 1 << j
        # partial order: antisymmetry and transitivity
        for i in range(m):
            for j in range(m):
                if i != j and up[i] >> j & 1 and up[j] >> i & 1:
                    raise NotALattice(f"antisymmetry fails on ({i}, {j})")
        for i in range(m):
            for j in range(m):
                if up[i] >> j & 1 and up[j] & ~up[i]:
                    raise NotALattice(f"transitivity fails above ({i}, {j})")
        down = [sum(1 << i for i in range(m) if up[i] >> j & 1) for j in range(m)]

        def inf(i: int, j: int) -> int:
            common = down[i] & down[j]
            for k in range(m):
                if common >> k & 1 and down[k] == common:
                    return k
            raise NotALattice(f"pair ({i}, {j}) has no greatest lower bound")

        def sup(i: int, j: int) -> int:
            common = up[i] & up[j]
            for k in range(m):
                if common >> k & 1 and up[k] == common:
                    return k
            raise NotALattice(f"pair ({i}, {j}) has no least upper bound")

        meet = [[inf(i, j) for j in range(m)] for i in range(m)]
        join = [[sup(i, j) for j in range(m)] for i in range(m)]
        bottoms = [i for i in range(m) if up[i].bit_count() == m]
        if len(bottoms) != 1:
            raise NotALattice("lattice must have a unique least element")
        return cls(
            up,
            meet,
            join,
            bottoms[0],
            tuple(payload_masks) if payload_masks is not None else None,
        )

    # -- basic queries -------------------------------------------------------

    def leq(self, i: int, j: int) -> bool:
        return bool(self.up[i] >> j & 1)

    def payload(self, i: int) -> PointSet:
        if self.payload_masks is None:
            raise ValueError("lattice carries no point-set payloads")
        return set_of(self.payload_masks[i])

    def atoms(self) -> tuple[int, ...]:
        """Minimal nonzero elements."""
        bot = self.bottom
        out = []
        for e in range(self.m):
            if e == bot:
                continue
            below = self.down[e] & ~(1 << e) & ~(1 << bot)
            if below == 0:
                out.append(e)
        return tuple(out)

    def covers(self) -> list[tuple[int, int]]:
        """Covering pairs (i, j): i < j with nothing strictly between."""
        out = []
        for i in range(self.m):
            for j in range(self.m):
                if i != j and self.leq(i, j):
                    between = self.up[i] & self.down[j] & ~(1 << i) & ~(1 << j)
                    if between == 0:
                        out.append((i, j))
        return out

    def __repr__(self):
        return f"{type(self).__name__}(m={self.m})"


def check_lattice_tables(l: FiniteLattice) -> tuple[bool, tuple | None]:
    """Exhaustively confirm meet/join are the inf/sup of the stored order and
    satisfy commutativity, associativity and absorption. Witness on failure."""
    m = l.m
    for i in range(m):
        for j in range(m):
            if l.down[l.meet[i][j]] != l.down[i] & l.down[j]:
                return False, ("meet-not-inf", i, j)
            if l.up[l.join[i][j]] != l.up[i] & l.up[j]:
                return False, ("join-not-sup", i, j)
            if l.meet[i][j] != l.meet[j][i]:
                return False, ("meet-commutativity", i, j)
            if l.join[i][j] != l.join[j][i]:
                return False, ("join-commutativity", i, j)
            if l.join[i][l.meet[i][j]] != i:
                return False, ("absorption", i, j)
            if l.meet[i][l.join[i][j]] != i:
                return False, ("absorption-dual", i, j)
    for i in range(m):
        for j in range(m):
            for k in range(m):
                if l.meet[l.meet[i][j]][k] != l.meet[i][l.meet[j][k]]:
                    return False, ("meet-associativity", i, j, k)
                if l.join[l.join[i][j]][k] != l.join[i][l.join[j][k]]:
                    return False, ("join-associativity", i, j, k)
    return True, None


class RegularOpenLattice(FiniteLattice):
    """The Boolean algebra of regular opens of a finite space.

    Elements are exactly the regular opens, ordered by inclusion. Meet is
    intersection; join of U and V is interior(closure(U | V)); the complement
    of U is interior(full - U). Construction enumerates the regular opens of
    the source topology and verifies all Boolean laws.
    """

    __slots__ = ("topology", "complement", "top", "index_of_mask")

    def __init__(self, topology: Topology):
        masks = topology.regular_open_masks()
        index = {mask: i for i, mask in enumerate(masks)}
        m = len(masks)
        up = [
            sum(1 << j for j, b in enumerate(masks) if a & b == a)
            for a in masks
        ]
        meet = [[index[a & b] for b in masks] for a in masks]
        join = [
            [index[topology.regularize_mask(a | b)] for b in masks] for a in masks
        ]
        comp = tuple(
            index[topology.interior_mask(topology.full_mask ^ a)] for a in masks
        )
        super().__init__(up, meet, join, index[0], tuple(masks))
        self.topology = topology
        self.complement = comp
        self.top = index[topology.full_mask]
        self.index_of_mask = index
        self._verify_boolean_laws()

    def _verify_boolean_laws(self):
        down, up, meet, join, comp = self.down, self.up, self.meet, self.join, self.complement
        for i in range(self.m):
            if comp[comp[i]] != i:
                raise VerificationError("complement is not an involution", i)
            if meet[i][comp[i]] != self.bottom or join[i][comp[i]] != self.top:
                raise VerificationError("complement laws fail", i)
            for j in range(self.m):
                if down[meet[i][j]] != down[i] & down[j]:
                    raise VerificationError("meet is not the inclusion inf", (i, j))
                if up[join[i][j]] != up[i] & up[j]:
                    raise VerificationError("join is not the inclusion sup", (i, j))
                if comp[meet[i][j]] != join[comp[i]][comp[j]]:
                    raise VerificationError("De Morgan (meet) fails", (i, j))
                if comp[join[i][j]] != meet[comp[i]][comp[j]]:
                    raise VerificationError("De Morgan (join) fails", (i, j))

    def element(self, i: int) -> PointSet:
        return set_of(self.payload_masks[i])

    def elements(self) -> tuple[PointSet, ...]:
        return tuple(set_of(mask) for mask in self.payload_masks)


def regular_open_lattice(t: Topology) -> RegularOpenLattice:
    return RegularOpenLattice(t)


# -- structure checks ---------------------------------------------------------


def check_distributive(l: FiniteLattice) -> tuple[bool, tuple | None]:
    """Full triple scan of a & (b | c) == (a & b) | (a & c)."""
    for a in range(l.m):
        for b in range(l.m):
            for c in range(l.m):
                if l.meet[a][l.join[b][c]] != l.join[l.meet[a][b]][l.meet[a][c]]:
                    return False, (a, b, c)
    return True, None


def check_boolean_algebra(l: RegularOpenLattice) -> tuple[bool, tuple | None]:
    """Involution, complement laws and De Morgan, scanned over all pairs."""
    for i in range(l.m):
        if l.complement[l.complement[i]] != i:
            return False, ("involution", i)
        if l.meet[i][l.complement[i]] != l.bottom:
            return False, ("meet-complement", i)
        if l.join[i][l.complement[i]] != l.top:
            return False, ("join-complement", i)
        for j in range(l.m):
            if l.complement[l.meet[i][j]] != l.join[l.complement[i]][l.complement[j]]:
                return False, ("de-morgan-meet", i, j)
            if l.complement[l.join[i][j]] != l.meet[l.complement[i]][l.complement[j]]:
                return False, ("de-morgan-join", i, j)
    return True, None


def wallman_disjunction(l: FiniteLattice) -> tuple[bool, tuple | None]:
    """For every a != b, some h meets exactly one of them at bottom.

    Read as exclusive-witness existence: there is h with a & h = 0 and
    b & h != 0, or the other way round.
    """
    bot = l.bottom
    for a in range(l.m):
        for b in range(a + 1, l.m):
            ok = False
            for h in range(l.m):
                if (l.meet[a][h] == bot) != (l.meet[b][h] == bot):
                    ok = True
                    break
            if not ok:
                return False, (a, b)
    return True, None


# -- the explicit extra relation ----------------------------------------------


def ge_relation(l: FiniteLattice) -> PairRelation:
    """The relation 'f >= g', the default choice on Boolean lattices."""
    return frozenset(
        (f, g) for f in range(l.m) for g in range(l.m) if l.leq(g, f)
    )


def well_inside(l: RegularOpenLattice) -> PairRelation:
    """Pairs (f, g) whose opens satisfy: U_f contains the closure of U_g.

    This is the relation the source space induces on its regular-open
    lattice; distinct spaces with isomorphic lattices can induce different
    relations, which is exactly what the counterexample gallery exhibits.
    """
    t = l.topology
    closures = [t.closure_mask(mask) for mask in l.payload_masks]
    return frozenset(
        (f, g)
        for f in range(l.m)
        for g in range(l.m)
        if closures[g] & ~l.payload_masks[f] == 0
    )


def validate_relation(l: FiniteLattice, rel: Iterable[tuple[int, int]]) -> PairRelation:
    rel = frozenset(rel)
    for f, g in rel:
        if not (0 <= f < l.m and 0 <= g < l.m):
            raise ValueError(f"relation pair ({f}, {g}) out of range for m={l.m}")
    return rel


# -- the six R-lattice axioms ---------------------------------------------------

AXIOM_NAMES = (
    "wallman_disjunction",
    "upward_monotone",
    "meet_compatible",
    "interpolation",
    "existence",
    "relative_complement",
)


@dataclass(frozen=True)
class AxiomResult:
    name: str
    passed: bool
    witness: tuple | None

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "witness": list(self.witness) if self.witness is not None else None,
        }


@dataclass(frozen=True)
class RLatticeReport:
    axioms: tuple[AxiomResult, ...]

    @property
    def passed(self) -> bool:
        return all(a.passed for a in self.axioms)

    def __getitem__(self, name: str) -> AxiomResult:
        for a in self.axioms:
            if a.name == name:
                return a
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {"passed": self.passed, "axioms": [a.to_dict() for a in self.axioms]}


def check_r_lattice(l: FiniteLattice, rel: Iterable[tuple[int, int]]) -> RLatticeReport:
    """Evaluate the six axioms of a distributive-lattice-with-relation triple.

    1. Wallman disjunction (order only).
    2. h >= f and (f, g) in rel imply (h, g) in rel.
    3. (f1, g1), (f2, g2) in rel imply (f1 & f2, g1 & g2) in rel.
    4. (f, g) in rel implies some h with (f, h) and (h, g) in rel.
    5. every f != 0 has some g1 with (g1, f) in rel and some g2 != 0 with
       (f, g2) in rel.
    6. (g1, f), (f, g2) in rel imply some h with h | f = g1 and h & g2 = 0.

    Every quantifier is scanned exhaustively in index order, so reported
    witnesses are lexicographically first.
    """
    rel = validate_relation(l, rel)
    pairs = sorted(rel)
    bot = l.bottom
    results = []

    ok, w = wallman_disjunction(l)
    results.append(AxiomResult(AXIOM_NAMES[0], ok, w))

    witness = None
    for f, g in pairs:
        for h in range(l.m):
            if l.leq(f, h) and (h, g) not in rel:
                witness = (h, f, g)
                break
        if witness:
            break
    results.append(AxiomResult(AXIOM_NAMES[1], witness is None, witness))

    witness = None
    for f1, g1 in pairs:
        for f2, g2 in pairs:
            if (l.meet[f1][f2], l.meet[g1][g2]) not in rel:
                witness = (f1, g1, f2, g2)
                break
        if witness:
            break
    results.append(AxiomResult(AXIOM_NAMES[2], witness is None, witness))

    witness = None
    for f, g in pairs:
        if not any((f, h) in rel and (h, g) in rel for h in range(l.m)):
            witness = (f, g)
            break
    results.append(AxiomResult(AXIOM_NAMES[3], witness is None, witness))

    witness = None
    for f in range(l.m):
        if f == bot:
            continue
        has_g1 = any((g1, f) in rel for g1 in range(l.m))
        has_g2 = any(g2 != bot and (f, g2) in rel for g2 in range(l.m))
        if not (has_g1 and has_g2):
            witness = (f,)
            break
    results.append(AxiomResult(AXIOM_NAMES[4], witness is None, witness))

    witness = None
    for g1, f in pairs:
        for ff, g2 in pairs:
            if ff != f:
                continue
            if not any(
                l.join[h][f] == g1 and l.meet[h][g2] == bot for h in range(l.m)
            ):
                witness = (g1, f, g2)
                break
        if witness:
            break
    results.append(AxiomResult(AXIOM_NAMES[5], witness is None, witness))

    return RLatticeReport(tuple(results))


# -- order isomorphism search ---------------------------------------------------


def _order_signature(l: FiniteLattice, i: int) -> tuple[int, int]:
    return (l.down[i].bit_count(), l.up[i].bit_count())


def find_order_isomorphisms(l1: FiniteLattice, l2: FiniteLattice) -> list[tuple[int, ...]]:
    """All bijections phi with i <= j iff phi(i) <= phi(j), lexicographic.

    Backtracking over element images, pruned by (down-set size, up-set size)
    signatures and partial order consistency.
    """
    if l1.m != l2.m:
        return []
    m = l1.m
    sig1 = [_order_signature(l1, i) for i in range(m)]
    sig2 = [_order_signature(l2, i) for i in range(m)]
    if sorted(sig1) != sorted(sig2):
        return []
    out: list[tuple[int, ...]] = []
    image: list[int] = [-1] * m
    used = [False] * m

    def backtrack(i: int):
        if i == m:
            out.append(tuple(image))
            return
        for y in range(m):
            if used[y] or sig1[i] != sig2[y]:
                continue
            if any(
                l1.leq(a, i) != l2.leq(image[a], y) or l1.leq(i, a) != l2.leq(y, image[a])
                for a in range(i)
            ):
                continue
            image[i] = y
            used[y] = True
            backtrack(i + 1)
            used[y] = False
            image[i] = -1

    backtrack(0)
    return out


def transport_relation(rel: PairRelation, phi: Sequence[int]) -> PairRelation:
    """Push a pair relation through an element bijection."""
    return frozenset((phi[f], phi[g]) for f, g in rel)
