"""The regular opens of a space form a Boolean algebra -- with the right
join. Plain union fails; interior-of-closure of the union works.

Run: python3 demos/02_regular_open_algebra.py
"""

from regopen import (
    check_boolean_algebra,
    check_distributive,
    regular_open_lattice,
    wallman_disjunction,
    x3,
)
from regopen.serialize import lattice_to_dot

t = x3()
lat = regular_open_lattice(t)

print("regular opens of X3, indexed:")
for i in range(lat.m):
    print(f"  [{i}] {sorted(lat.element(i))}")

print("\n{0} and {1} are regular, but their union {0,1} is not:")
print("  is_regular_open({0,1}) =", t.is_regular_open({0, 1}))
i0, i1 = lat.index_of_mask[0b001], lat.index_of_mask[0b010]
print("  join([0], [1]) = int(cl({0,1})) =", sorted(lat.element(lat.join[i0][i1])))

print("\ncomplement is interior of the set complement:")
for i in range(lat.m):
    print(f"  ~{sorted(lat.element(i))} = {sorted(lat.element(lat.complement[i]))}")

print("\nstructure checks (exhaustive scans):")
print("  boolean laws:    ", check_boolean_algebra(lat))
print("  distributivity:  ", check_distributive(lat))
print("  wallman property:", wallman_disjunction(lat))

print("\nHasse diagram (DOT, covering edges only):")
print(lattice_to_dot(lat), end="")
