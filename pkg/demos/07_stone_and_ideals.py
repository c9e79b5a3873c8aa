"""Finite Stone duality and the ideal/open correspondence on powersets.

Run: python3 demos/07_stone_and_ideals.py
"""

from regopen import (
    discrete,
    ideal_open_correspondence,
    ideals,
    maximal_ideals,
    regular_open_lattice,
    sierpinski,
    stone_space,
    ultrafilters,
    x3,
)

print("== Stone spaces: atoms become points, elements become clopens ==")
for name, t in [("X3", x3()), ("Sierpinski", sierpinski()), ("D3", discrete(3))]:
    lat = regular_open_lattice(t)
    st = stone_space(lat)
    print(f"{name}: |R| = {lat.m}, atoms = {len(st.atoms)} -> discrete space on {st.space.n} points")
    for i in range(lat.m):
        print(f"    {sorted(lat.element(i))} -> {sorted(st.to_clopen[i])}")

print("\n== Ideals of the powerset lattice on 3 points ==")
all_ideals = ideals(3)
print(f"{len(all_ideals)} ideals, all principal (union-closed + downward closed")
print("forces a single maximal member):")
for ideal in all_ideals:
    tag = " (maximal proper)" if ideal in maximal_ideals(3) else ""
    print(f"  down({sorted(ideal.maximum)}): {len(ideal.members)} members{tag}")

print("\nultrafilters are complements of maximal ideals, one per point:")
for uf in ultrafilters(3):
    print(f"  point {uf.point}: {len(uf.members)} member sets, all containing {uf.point}")

print("\n== Opens of the discrete space <-> ideals, inclusion both ways ==")
corr = ideal_open_correspondence(2)
for w, ideal in corr.pairs:
    members = sorted(sorted(m) for m in ideal.members)
    print(f"  open {sorted(w)} <-> ideal {members}")
print("(verified at construction: bijection, mutual inverses, inclusion preserved)")
