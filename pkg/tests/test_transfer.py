"""Dense-subspace transfer: restriction/extension isomorphisms, separating
witnesses, the common-core composite, and point recovery."""

import pytest

from regopen import (
    DenseEmbedding,
    EnumerationSpec,
    closure_density_check,
    discrete,
    enumerate_dense_subsets,
    enumerate_topologies,
    extend_regular,
    point_recovery,
    restrict_regular,
    restriction_isomorphism,
    separating_witness,
    sierpinski,
    transfer_isomorphism,
    x3,
)
from regopen.errors import (
    ContainmentHolds,
    CoresNotHomeomorphic,
    NotABasis,
    NotDense,
    NotInclusionPreserving,
    NotOpen,
    NotRegularOpen,
)

from oracles import closure_oracle

fs = frozenset
X3 = x3()
S = sierpinski()
D2 = discrete(2)


def test_dense_embedding_requires_density():
    with pytest.raises(NotDense):
        DenseEmbedding(discrete(2), {0})


# -- restriction and extension -------------------------------------------------


def test_restrict_frozen_values():
    e = DenseEmbedding(X3, {0, 1})
    assert restrict_regular(e, {0}) == fs({0})
    assert restrict_regular(e, fs()) == fs()
    e1 = DenseEmbedding(S, {0})
    assert restrict_regular(e1, {0, 1}) == fs({0})


def test_extend_frozen_values():
    e = DenseEmbedding(X3, {0, 1})
    assert extend_regular(e, {0, 1}) == fs({0, 1, 2})
    assert extend_regular(e, fs()) == fs()
    e1 = DenseEmbedding(S, {0})
    assert extend_regular(e1, {0}) == fs({0, 1})


def test_restrict_rejects_non_regular():
    e = DenseEmbedding(X3, {0, 1})
    with pytest.raises(NotRegularOpen):
        restrict_regular(e, {0, 1})  # open but not regular in X3
    # chain space whose dense subspace is Sierpinski: {0} is open but not
    # regular down there
    from regopen import Topology

    chain = Topology(3, [0b000, 0b001, 0b011, 0b111])
    e2 = DenseEmbedding(chain, {0, 1})
    with pytest.raises(NotRegularOpen):
        extend_regular(e2, {0})


def test_restriction_isomorphism_x3():
    w = restriction_isomorphism(DenseEmbedding(X3, {0, 1}))
    assert w.source.m == w.target.m == 4
    assert w.apply({0}) == fs({0})
    assert w.apply({0, 1, 2}) == fs({0, 1})


def test_restriction_isomorphism_identity_on_full_subset():
    for t in (S, X3, discrete(3)):
        w = restriction_isomorphism(DenseEmbedding(t, range(t.n)))
        assert w.forward == tuple(range(w.source.m))


def test_restriction_isomorphism_exhaustive_small():
    """The flagship scan at n <= 3: every space, every dense subset."""
    for n in (1, 2, 3):
        for t in enumerate_topologies(EnumerationSpec(n)):
            for y in enumerate_dense_subsets(t):
                w = restriction_isomorphism(DenseEmbedding(t, y))
                for i in range(w.source.m):
                    assert w.backward[w.forward[i]] == i


# -- closure agreement over dense traces -------------------------------------------


def test_closure_density_frozen_values():
    assert closure_density_check(S, {0}, {0, 1})
    assert closure_density_check(X3, {0, 1}, {0})
    assert closure_density_check(X3, {0, 1}, fs())


def test_closure_density_validates_arguments():
    with pytest.raises(NotOpen):
        closure_density_check(X3, {0, 1}, {2})
    with pytest.raises(NotDense):
        closure_density_check(D2, {0}, {0})


def test_closure_density_exhaustive_small():
    for n in (1, 2, 3):
        for t in enumerate_topologies(EnumerationSpec(n)):
            for y in enumerate_dense_subsets(t):
                for u in t.opens:
                    assert closure_density_check(t, y, u)
                    # and the quantity itself matches the naive oracle
                    assert t.closure(u) == closure_oracle(t, frozenset(u) & y)


# -- separating witnesses ---------------------------------------------------------


def test_separating_witness_frozen_values():
    assert separating_witness(discrete(3), {0, 1}, {1, 2}) == fs({0})
    assert separating_witness(X3, {0}, {1}) == fs({0})


def test_separating_witness_containment_path():
    with pytest.raises(ContainmentHolds):
        separating_witness(discrete(3), {1}, {1, 2})
    with pytest.raises(NotRegularOpen):
        separating_witness(X3, {0, 1}, {0})


def test_separating_witness_postconditions_exhaustive():
    for n in (1, 2, 3):
        for t in enumerate_topologies(EnumerationSpec(n)):
            regs = t.regular_opens()
            for u in regs:
                for v in regs:
                    if u <= v:
                        continue
                    w = separating_witness(t, u, v)
                    assert w and w <= u and not (w & v)
                    assert t.is_regular_open(w)


# -- transfer through a common core --------------------------------------------------


def test_transfer_x3_d2():
    ex = DenseEmbedding(X3, {0, 1})
    ey = DenseEmbedding(D2, {0, 1})
    w = transfer_isomorphism(ex, ey, {0: 0, 1: 1})
    images = {
        tuple(sorted(w.source.element(i))): tuple(sorted(w.target.element(w.forward[i])))
        for i in range(w.source.m)
    }
    assert images == {(): (), (0,): (0,), (1,): (1,), (0, 1, 2): (0, 1)}


def test_transfer_identity_when_core_is_whole_space():
    e = DenseEmbedding(X3, range(3))
    w = transfer_isomorphism(e, e, {i: i for i in range(3)})
    assert w.forward == tuple(range(w.source.m))


def test_transfer_sierpinski_to_point():
    ex = DenseEmbedding(S, {0})
    ey = DenseEmbedding(discrete(1), {0})
    w = transfer_isomorphism(ex, ey, {0: 0})
    assert w.source.m == w.target.m == 2


def test_transfer_roundtrip_is_identity():
    ex = DenseEmbedding(X3, {0, 1})
    ey = DenseEmbedding(D2, {0, 1})
    there = transfer_isomorphism(ex, ey, {0: 0, 1: 1})
    back = transfer_isomorphism(ey, ex, {0: 0, 1: 1})
    for i in range(there.source.m):
        assert back.forward[there.forward[i]] == i


def test_transfer_rejects_non_homeomorphic_cores():
    from regopen import Topology

    chain = Topology(3, [0b000, 0b001, 0b011, 0b111])
    ex = DenseEmbedding(chain, {0, 1})  # subspace is Sierpinski, not discrete
    ey = DenseEmbedding(D2, {0, 1})
    with pytest.raises(CoresNotHomeomorphic):
        transfer_isomorphism(ex, ey, {0: 0, 1: 1})
    with pytest.raises(CoresNotHomeomorphic):
        transfer_isomorphism(DenseEmbedding(X3, {0, 1}), ey, {0: 0, 1: 0})


# -- point recovery --------------------------------------------------------------------


BX = [fs({0}), fs({1}), fs({0, 1, 2})]
BY = [fs({0}), fs({1}), fs({0, 1})]
CANONICAL_ISO = {fs({0}): fs({0}), fs({1}): fs({1}), fs({0, 1, 2}): fs({0, 1})}


def test_point_recovery_x3_d2():
    ph = point_recovery(X3, BX, D2, BY, CANONICAL_ISO)
    assert ph.x0 == fs({0, 1}) and ph.y0 == fs({0, 1})
    assert ph.tau == {0: 0, 1: 1}
    assert ph.recovery_x[2] == fs({0, 1})  # not a singleton: 2 is not recovered
    assert X3.is_dense(ph.x0)


def test_point_recovery_swapped_iso():
    swap = {fs({0}): fs({1}), fs({1}): fs({0}), fs({0, 1, 2}): fs({0, 1})}
    ph = point_recovery(X3, BX, D2, BY, swap)
    assert ph.tau == {0: 1, 1: 0}


def test_point_recovery_identity_on_discrete():
    basis = [s for s in D2.regular_opens() if s]
    ph = point_recovery(D2, basis, D2, basis, {s: s for s in basis})
    assert ph.x0 == fs({0, 1}) and ph.tau == {0: 0, 1: 1}


def test_point_recovery_validates_basis():
    with pytest.raises(NotABasis):
        point_recovery(X3, [fs({0, 1, 2})], D2, BY, {fs({0, 1, 2}): fs({0, 1})})
    with pytest.raises(NotABasis):
        point_recovery(X3, [fs({2}), fs({0}), fs({1}), fs({0, 1, 2})], D2, BY, {})


def test_point_recovery_validates_inclusion_preservation():
    bx = [fs({0}), fs({1}), fs({0, 1}), fs({0, 1, 2})]
    by = [fs(), fs({0}), fs({1}), fs({0, 1})]
    bad = {
        fs({0}): fs({0}),
        fs({1}): fs({0, 1}),
        fs({0, 1}): fs({1}),
        fs({0, 1, 2}): fs(),
    }
    with pytest.raises(NotInclusionPreserving):
        point_recovery(X3, bx, D2, by, bad)


def test_point_recovery_compatibility_exhaustive():
    """tau(x) lands in iso(U) exactly when x is in U, for every recovered x."""
    for n in (1, 2, 3):
        for t in enumerate_topologies(EnumerationSpec(n)):
            bx = [s for s in t.regular_opens() if s]
            if any(not t.is_open(u) for u in bx) or not _covers(t, bx):
                continue
            for y in enumerate_dense_subsets(t):
                emb = DenseEmbedding(t, y)
                by = [s for s in emb.sub.regular_opens() if s]
                if not _covers(emb.sub, by):
                    continue
                iso = {u: restrict_regular(emb, u) for u in bx}
                ph = point_recovery(t, bx, emb.sub, by, iso)
                for x, yy in ph.tau.items():
                    assert emb.index_map[x] == yy
                    for u in bx:
                        assert (x in u) == (yy in iso[u])


def _covers(t, basis):
    for u in t.opens:
        cover = frozenset()
        for b in basis:
            if b <= u:
                cover |= b
        if cover != frozenset(u):
            return False
    return True
