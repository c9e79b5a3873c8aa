"""The cofinite topology on an infinite set, computed symbolically: every
nonempty open is dense, so the regular opens collapse to {empty, everything}.

The ground set is never materialized -- sets are a finite support plus a
finite/cofinite flag -- so the identical engine covers the cocountable
topology on an uncountable set (read the support as the countable
exceptional set).

Run: python3 demos/08_cofinite_symbolic.py
"""

import random

from regopen import indiscrete, regular_open_lattice
from regopen.cofinite import (
    FULL,
    cofinite,
    complement,
    finite,
    intersect,
    is_dense,
    regular_opens,
    union,
)

print("== symbolic set algebra ==")
a, b = cofinite({1, 2}), cofinite({2, 3})
print(f"{a!r} & {b!r} = {intersect(a, b)!r}")
c = finite({1})
print(f"{c!r} | {complement(c)!r} = {union(c, complement(c))!r}")

print("\n== every nonempty open is dense ==")
for s in (FULL, cofinite({0}), cofinite(range(4))):
    print(f"  {s!r}: dense = {is_dense(s)}")

print("\n== hence only two regular opens ==")
family, traces = regular_opens()
for tr in traces:
    verdict = "regular" if tr.regular else "regularizes to the full set"
    print(f"  {tr.queried!r}: {verdict}")
print(f"family: {family[0]!r}, {family[1]!r}")

print("\nthe same two-element lattice as a 2-point indiscrete space,")
print("though the spaces could hardly be more different:")
print("  R(indiscrete pair) =", [sorted(u) for u in regular_open_lattice(indiscrete(2)).elements()])

print("\n== a quick randomized sanity pass over the algebra ==")
rnd = random.Random(0)
for _ in range(1000):
    kinds = [finite, cofinite]
    x = rnd.choice(kinds)(rnd.sample(range(8), rnd.randint(0, 4)))
    y = rnd.choice(kinds)(rnd.sample(range(8), rnd.randint(0, 4)))
    assert complement(complement(x)) == x
    assert complement(union(x, y)) == intersect(complement(x), complement(y))
print("1000 De Morgan / involution trials passed")
