"""Recovering points from a basis isomorphism, and transferring the
regular-open lattice through a common dense core.

X3 and the discrete pair D2 are not homeomorphic (different sizes), yet both
contain the discrete pair densely, so their regular-open lattices are
isomorphic; the recovery sets identify exactly the shared core.

Run: python3 demos/04_point_recovery.py
"""

from regopen import DenseEmbedding, discrete, point_recovery, transfer_isomorphism, x3

fs = frozenset
X3, D2 = x3(), discrete(2)

BX = [fs({0}), fs({1}), fs({0, 1, 2})]
BY = [fs({0}), fs({1}), fs({0, 1})]
iso = {fs({0}): fs({0}), fs({1}): fs({1}), fs({0, 1, 2}): fs({0, 1})}

print("bases: BX =", [sorted(b) for b in BX], " BY =", [sorted(b) for b in BY])
ph = point_recovery(X3, BX, D2, BY, iso)
print("\nrecovery sets (intersection of images of basic neighborhoods):")
for x in range(3):
    print(f"  point {x} of X3 -> {sorted(ph.recovery_x[x])}")
print("point 2 is in every member of BX only through the top, so it never")
print("narrows to a singleton and is not recovered.")
print(f"\nX0 = {sorted(ph.x0)} (dense in X3: {X3.is_dense(ph.x0)}), "
      f"Y0 = {sorted(ph.y0)}, tau = {ph.tau}")

swap = {fs({0}): fs({1}), fs({1}): fs({0}), fs({0, 1, 2}): fs({0, 1})}
print("\nswapping the two atoms in the basis isomorphism swaps the recovered map:")
print("  tau =", point_recovery(X3, BX, D2, BY, swap).tau)

print("\ntransfer through the common core {0,1}:")
there = transfer_isomorphism(DenseEmbedding(X3, {0, 1}), DenseEmbedding(D2, {0, 1}), {0: 0, 1: 1})
for i in range(there.source.m):
    src = sorted(there.source.element(i))
    dst = sorted(there.target.element(there.forward[i]))
    print(f"  {src} -> {dst}")
back = transfer_isomorphism(DenseEmbedding(D2, {0, 1}), DenseEmbedding(X3, {0, 1}), {0: 0, 1: 1})
round_trip = all(back.forward[there.forward[i]] == i for i in range(there.source.m))
print("round trip X3 -> D2 -> X3 is the identity:", round_trip)
