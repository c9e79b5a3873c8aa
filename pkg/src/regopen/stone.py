"""Stone representation of a finite Boolean algebra of regular opens.

At finite scale every ultrafilter of a Boolean algebra is principal at an
atom, so the Stone space is the discrete space on the atoms and the clopen
(= regular open) algebra of that space is the full powerset of atoms.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotBoolean, VerificationError
from .lattice import RegularOpenLattice, check_boolean_algebra, check_distributive
from .topology import PointSet, Topology, discrete


@dataclass(frozen=True)
class StoneSpace:
    """Discrete space on the atoms of a Boolean algebra, plus the
    element -> clopen-set isomorphism witnessing the duality."""

    space: Topology
    atoms: tuple[int, ...]
    to_clopen: tuple[PointSet, ...]

    def clopen_of(self, element: int) -> PointSet:
        return self.to_clopen[element]


def stone_space(b: RegularOpenLattice) -> StoneSpace:
    """Build the Stone space of ``b`` and verify the duality isomorphism.

    Raises NotBoolean unless ``b`` passes the Boolean-algebra and
    distributivity checks. The returned map sends each element to the set of
    atoms below it; it is verified to be an order isomorphism onto the full
    powerset of atoms.
    """
    ok, witness = check_boolean_algebra(b)
    if not ok:
        raise NotBoolean(f"Boolean law fails: {witness}")
    ok, witness = check_distributive(b)
    if not ok:
        raise NotBoolean(f"distributivity fails: {witness}")
    atoms = b.atoms()
    positions = {a: i for i, a in enumerate(atoms)}
    to_clopen = tuple(
        frozenset(positions[a] for a in atoms if b.leq(a, u)) for u in range(b.m)
    )
    if len(set(to_clopen)) != b.m or b.m != 1 << len(atoms):
        raise VerificationError("atom map is not a bijection onto the powerset")
    for u in range(b.m):
        for v in range(b.m):
            if b.leq(u, v) != (to_clopen[u] <= to_clopen[v]):
                raise VerificationError("atom map does not preserve order", (u, v))
    return StoneSpace(discrete(len(atoms)), atoms, to_clopen)
