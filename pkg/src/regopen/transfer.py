"""Transfer of regular-open structure across dense subspaces.

The central facts made executable here, each verified instance by instance:

* restriction U -> U & Y is a lattice isomorphism from the regular opens of
  a space onto those of any dense subspace, with inverse V -> int(cl(V));
* two spaces densely containing homeomorphic copies of a common core have
  isomorphic regular-open lattices, via an explicit four-step composite;
* an inclusion-preserving bijection between bases recovers a partial point
  correspondence: each point maps to the intersection of the images of its
  basic neighborhoods, and the points with mutually-singleton recovery sets
  form subspaces on which the correspondence is a homeomorphism.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .errors import (
    CompositionNotIdentity,
    CompositionNotIso,
    ContainmentHolds,
    CoresNotHomeomorphic,
    NotABasis,
    NotDense,
    NotInclusionPreserving,
    NotOpen,
    NotRegularOpen,
    VerificationError,
)
from .lattice import RegularOpenLattice, regular_open_lattice
from .topology import PointSet, Topology, iter_bits, set_of


class DenseEmbedding:
    """A dense subset of an ambient space together with its subspace.

    ``index_map`` sends ambient points of the subset to subspace indices;
    ``points`` lists ambient points in subspace-index order.
    """

    __slots__ = ("ambient", "subset_mask", "sub", "index_map", "points")

    def __init__(self, ambient: Topology, subset: Iterable[int]):
        mask = ambient.to_mask(subset)
        if ambient.closure_mask(mask) != ambient.full_mask:
            raise NotDense(f"{sorted(set_of(mask))} is not dense in the ambient space")
        self.ambient = ambient
        self.subset_mask = mask
        self.sub, self.index_map = ambient.subspace(mask)
        self.points = tuple(sorted(self.index_map, key=self.index_map.get))

    @property
    def subset(self) -> PointSet:
        return set_of(self.subset_mask)

    def compress(self, ambient_mask: int) -> int:
        out = 0
        for p, i in self.index_map.items():
            if ambient_mask >> p & 1:
                out |= 1 << i
        return out

    def expand(self, sub_mask: int) -> int:
        out = 0
        for i in iter_bits(sub_mask):
            out |= 1 << self.points[i]
        return out


def restrict_regular(e: DenseEmbedding, u: Iterable[int]) -> PointSet:
    """Trace a regular open of the ambient space on the dense subspace.

    The result is verified to be regular open down there, which is the
    well-definedness half of the restriction-isomorphism statement.
    """
    mask = e.ambient.to_mask(u)
    if not e.ambient.is_regular_open_mask(mask):
        raise NotRegularOpen(f"{sorted(set_of(mask))} is not regular open in the ambient space")
    traced = e.compress(mask & e.subset_mask)
    if not e.sub.is_regular_open_mask(traced):
        raise VerificationError(
            "trace of a regular open is not regular open in the subspace",
            sorted(set_of(mask)),
        )
    return set_of(traced)


def extend_regular(e: DenseEmbedding, v: Iterable[int]) -> PointSet:
    """Send a regular open of the subspace to int(cl(.)) upstairs."""
    sub_mask = e.sub.to_mask(v)
    if not e.sub.is_regular_open_mask(sub_mask):
        raise NotRegularOpen(f"{sorted(set_of(sub_mask))} is not regular open in the subspace")
    return set_of(e.ambient.regularize_mask(e.expand(sub_mask)))


class LatticeIsoWitness:
    """A checked order isomorphism between two regular-open lattices.

    Construction verifies that forward and backward are mutually inverse
    bijections preserving order in both directions.
    """

    __slots__ = ("source", "target", "forward", "backward")

    def __init__(
        self,
        source: RegularOpenLattice,
        target: RegularOpenLattice,
        forward: tuple[int, ...],
        backward: tuple[int, ...],
    ):
        if source.m != target.m:
            raise CompositionNotIso("lattice sizes differ", (source.m, target.m))
        for i in range(source.m):
            if backward[forward[i]] != i:
                raise CompositionNotIdentity("backward(forward(.)) is not the identity", i)
        for j in range(target.m):
            if forward[backward[j]] != j:
                raise CompositionNotIdentity("forward(backward(.)) is not the identity", j)
        for i in range(source.m):
            for j in range(source.m):
                if source.leq(i, j) != target.leq(forward[i], forward[j]):
                    raise CompositionNotIso("order not preserved", (i, j))
        self.source = source
        self.target = target
        self.forward = forward
        self.backward = backward

    def apply(self, u: Iterable[int]) -> PointSet:
        i = self.source.index_of_mask[self.source.topology.to_mask(u)]
        return self.target.element(self.forward[i])

    def invert(self) -> "LatticeIsoWitness":
        return LatticeIsoWitness(self.target, self.source, self.backward, self.forward)


def restriction_isomorphism(e: DenseEmbedding) -> LatticeIsoWitness:
    """Verify that U -> U & Y and V -> int(cl(V)) are mutually inverse
    order isomorphisms between the regular opens upstairs and downstairs.

    Raises CompositionNotIdentity / CompositionNotIso with the offending
    element if any part fails; a correct build never triggers either.
    """
    upstairs = regular_open_lattice(e.ambient)
    downstairs = regular_open_lattice(e.sub)
    if upstairs.m != downstairs.m:
        raise CompositionNotIso(
            "regular-open counts differ across the dense embedding",
            (upstairs.m, downstairs.m),
        )
    forward = []
    for mask in upstairs.payload_masks:
        traced = e.sub.to_mask(restrict_regular(e, set_of(mask)))
        forward.append(downstairs.index_of_mask[traced])
    backward = []
    for mask in downstairs.payload_masks:
        lifted = e.ambient.to_mask(extend_regular(e, set_of(mask)))
        backward.append(upstairs.index_of_mask[lifted])
    for i, mask in enumerate(upstairs.payload_masks):
        if backward[forward[i]] != i:
            raise CompositionNotIdentity(
                "extension of the trace moved a regular open", sorted(set_of(mask))
            )
    for j, mask in enumerate(downstairs.payload_masks):
        if forward[backward[j]] != j:
            raise CompositionNotIdentity(
                "trace of the extension moved a regular open", sorted(set_of(mask))
            )
    return LatticeIsoWitness(upstairs, downstairs, tuple(forward), tuple(backward))


def closure_density_check(t: Topology, y: Iterable[int], u: Iterable[int]) -> bool:
    """Compare cl(U) with cl(U & Y) for dense Y and open U.

    Both closures are computed independently; the equality is a theorem, so
    a False return is a bug detector, not an expected outcome.
    """
    ymask = t.to_mask(y)
    umask = t.to_mask(u)
    if not t.is_open_mask(umask):
        raise NotOpen(f"{sorted(set_of(umask))} is not open")
    if t.closure_mask(ymask) != t.full_mask:
        raise NotDense(f"{sorted(set_of(ymask))} is not dense")
    return t.closure_mask(umask) == t.closure_mask(umask & ymask)


def separating_witness(t: Topology, u: Iterable[int], v: Iterable[int]) -> PointSet:
    """For regular opens with U not contained in V, return W = U - cl(V).

    The result is verified nonempty, regular open, contained in U and
    disjoint from V. Raises ContainmentHolds when U is contained in V (the
    hypothesis fails, so no witness is owed).
    """
    umask = t.to_mask(u)
    vmask = t.to_mask(v)
    for name, mask in (("U", umask), ("V", vmask)):
        if not t.is_regular_open_mask(mask):
            raise NotRegularOpen(f"{name}={sorted(set_of(mask))} is not regular open")
    if umask & ~vmask == 0:
        raise ContainmentHolds("U is contained in V; no separating witness exists")
    w = umask & (t.full_mask ^ t.closure_mask(vmask))
    if w == 0:
        raise VerificationError("separating witness is empty", (sorted(set_of(umask)), sorted(set_of(vmask))))
    if not t.is_regular_open_mask(w):
        raise VerificationError("separating witness is not regular open", sorted(set_of(w)))
    if w & ~umask or w & vmask:
        raise VerificationError("separating witness violates containment/disjointness", sorted(set_of(w)))
    return set_of(w)


def transfer_isomorphism(
    ex: DenseEmbedding, ey: DenseEmbedding, core_map: Mapping[int, int]
) -> LatticeIsoWitness:
    """Compose the regular-open isomorphism induced by a common dense core.

    ``core_map`` identifies the subspace of ``ex`` with the subspace of
    ``ey`` and must be a homeomorphism. Each regular open U upstairs in X is
    sent along U -> U & X0 -> core -> Y0 -> int(cl(.)), and the composite is
    verified to be an order isomorphism equal to extension-after-conjugated-
    restriction.
    """
    zx, zy = ex.sub, ey.sub
    if zx.n != zy.n:
        raise CoresNotHomeomorphic(f"core sizes differ: {zx.n} vs {zy.n}")
    perm = [core_map[i] for i in range(zx.n)]
    if sorted(perm) != list(range(zy.n)):
        raise CoresNotHomeomorphic("core map is not a bijection")

    def push(sub_mask: int) -> int:
        out = 0
        for i in iter_bits(sub_mask):
            out |= 1 << perm[i]
        return out

    if {push(m) for m in zx.open_masks} != set(zy.open_masks):
        raise CoresNotHomeomorphic("core map does not carry opens onto opens")

    lx = regular_open_lattice(ex.ambient)
    ly = regular_open_lattice(ey.ambient)
    if lx.m != ly.m:
        raise CompositionNotIso("regular-open counts differ", (lx.m, ly.m))
    forward = []
    for mask in lx.payload_masks:
        through_core = push(ex.compress(mask & ex.subset_mask))
        image = ey.ambient.regularize_mask(ey.expand(through_core))
        # Same arrow, spelled as extension of the conjugated restriction.
        traced = zx.to_mask(restrict_regular(ex, set_of(mask)))
        via_ops = ey.ambient.to_mask(extend_regular(ey, set_of(push(traced))))
        if image != via_ops:
            raise VerificationError(
                "four-step composite disagrees with extension-after-restriction",
                sorted(set_of(mask)),
            )
        if image not in ly.index_of_mask:
            raise CompositionNotIso("composite left the regular opens", sorted(set_of(mask)))
        forward.append(ly.index_of_mask[image])
    if len(set(forward)) != lx.m:
        dup = next(
            (i, j)
            for i in range(lx.m)
            for j in range(i + 1, lx.m)
            if forward[i] == forward[j]
        )
        raise CompositionNotIso("composite is not injective", dup)
    backward = [0] * ly.m
    for i, j in enumerate(forward):
        backward[j] = i
    return LatticeIsoWitness(lx, ly, tuple(forward), tuple(backward))


# -- point recovery from a basis isomorphism ----------------------------------


def check_basis(t: Topology, basis: Iterable[Iterable[int]]) -> tuple[int, ...]:
    """Validate that every open of ``t`` is a union of basis members.

    Returns the basis as masks, sorted. Raises NotABasis with an offending
    member or an uncoverable open.
    """
    masks = sorted({t.to_mask(b) for b in basis})
    for b in masks:
        if not t.is_open_mask(b):
            raise NotABasis(f"basis member {sorted(set_of(b))} is not open")
    for u in t.open_masks:
        cover = 0
        for b in masks:
            if b & u == b:
                cover |= b
        if cover != u:
            raise NotABasis(f"open {sorted(set_of(u))} is not a union of basis members")
    return tuple(masks)


class PartialHomeomorphism:
    """Outcome of point recovery: recovery sets, the recovered point sets
    X0 and Y0, and the bijection tau between them."""

    __slots__ = ("x0", "y0", "tau", "recovery_x", "recovery_y")

    def __init__(self, x0, y0, tau, recovery_x, recovery_y):
        self.x0: PointSet = x0
        self.y0: PointSet = y0
        self.tau: dict[int, int] = tau
        self.recovery_x: dict[int, PointSet] = recovery_x
        self.recovery_y: dict[int, PointSet] = recovery_y


def point_recovery(
    tx: Topology,
    bx: Iterable[Iterable[int]],
    ty: Topology,
    by: Iterable[Iterable[int]],
    iso: Mapping[PointSet, PointSet],
) -> PartialHomeomorphism:
    """Recover a partial point correspondence from a basis isomorphism.

    For each x, the recovery set is the intersection of iso(U) over all
    basis members U containing x (and symmetrically with the inverse
    bijection on the other side). X0 collects the x whose recovery set is a
    singleton {y} with recovery set {x} in return; tau maps each such x to
    its y. The compatibility tau(x) in iso(U) iff x in U is verified for
    every basis member and every recovered point, and tau is verified to be
    a homeomorphism between the subspaces on X0 and Y0.
    """
    bx_masks = check_basis(tx, bx)
    by_masks = check_basis(ty, by)
    iso_masks = {tx.to_mask(u): ty.to_mask(v) for u, v in iso.items()}
    if sorted(iso_masks) != list(bx_masks) or sorted(iso_masks.values()) != list(by_masks):
        raise ValueError("iso must be a bijection between the two bases")
    for u1, u2 in ((a, b) for a in bx_masks for b in bx_masks):
        if (u1 & u2 == u1) != (iso_masks[u1] & iso_masks[u2] == iso_masks[u1]):
            raise NotInclusionPreserving(set_of(u1), set_of(u2))
    inv_masks = {v: u for u, v in iso_masks.items()}

    def recover(n: int, basis: tuple[int, ...], image, full: int) -> list[int]:
        out = []
        for x in range(n):
            acc = full
            for b in basis:
                if b >> x & 1:
                    acc &= image[b]
            out.append(acc)
        return out

    rx = recover(tx.n, bx_masks, iso_masks, ty.full_mask)
    ry = recover(ty.n, by_masks, inv_masks, tx.full_mask)

    tau: dict[int, int] = {}
    for x in range(tx.n):
        if rx[x].bit_count() == 1:
            y = rx[x].bit_length() - 1
            if ry[y] == 1 << x:
                tau[x] = y
    x0_mask = sum(1 << x for x in tau)
    y0_mask = sum(1 << y for y in tau.values())

    for u in bx_masks:
        for x, y in tau.items():
            if bool(u >> x & 1) != bool(iso_masks[u] >> y & 1):
                raise VerificationError(
                    "recovered correspondence breaks basis compatibility",
                    (sorted(set_of(u)), x),
                )
    if tau:
        sub_x, map_x = tx.subspace(x0_mask)
        sub_y, map_y = ty.subspace(y0_mask)
        relabel = {map_x[x]: map_y[y] for x, y in tau.items()}
        carried = set()
        for m in sub_x.open_masks:
            out = 0
            for i in iter_bits(m):
                out |= 1 << relabel[i]
            carried.add(out)
        if carried != set(sub_y.open_masks):
            raise VerificationError("recovered correspondence is not a subspace homeomorphism")

    return PartialHomeomorphism(
        set_of(x0_mask),
        set_of(y0_mask),
        tau,
        {x: set_of(rx[x]) for x in range(tx.n)},
        {y: set_of(ry[y]) for y in range(ty.n)},
    )


def recovery_via_minimal_members(
    tx: Topology, bx_masks: tuple[int, ...], iso_masks: Mapping[int, int], full_target: int
) -> list[int]:
    """Recovery sets computed from only the minimal basis members at each point.

    Equivalent to the literal all-members intersection because every basis
    member containing x shrinks to a minimal one below it; kept as a
    cross-checked acceleration.
    """
    out = []
    for x in range(tx.n):
        containing = [b for b in bx_masks if b >> x & 1]
        minimal = [
            b for b in containing if not any(c != b and c & b == c for c in containing)
        ]
        acc = full_target
        for b in minimal:
            acc &= iso_masks[b]
        out.append(acc)
    return out
