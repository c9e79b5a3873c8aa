"""Regular-open algebras, lattice law checks, the explicit extra relation,
and the six R-lattice axioms."""

import pytest

from regopen import (
    EnumerationSpec,
    FiniteLattice,
    check_boolean_algebra,
    check_distributive,
    check_lattice_tables,
    check_r_lattice,
    discrete,
    enumerate_topologies,
    find_order_isomorphisms,
    ge_relation,
    regular_open_lattice,
    sierpinski,
    transport_relation,
    wallman_disjunction,
    well_inside,
    x3,
)
from regopen.errors import NotALattice

from oracles import closure_oracle, interior_oracle, opens_as_sets

LS = regular_open_lattice(sierpinski())
LX3 = regular_open_lattice(x3())
LD2 = regular_open_lattice(discrete(2))


def diamond_m3() -> FiniteLattice:
    # bottom 0, incomparable middles 1,2,3, top 4: the classical
    # non-distributive (even non-modular-complement) five-element lattice
    return FiniteLattice.from_leq(
        5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 4), (2, 4), (3, 4)]
    )


def two_chain() -> FiniteLattice:
    return FiniteLattice.from_leq(2, [(0, 1)])


# -- construction ----------------------------------------------------------------


def test_regular_open_lattice_of_fixtures():
    assert LS.elements() == (frozenset(), frozenset({0, 1}))
    assert set(LX3.elements()) == {
        frozenset(),
        frozenset({0}),
        frozenset({1}),
        frozenset({0, 1, 2}),
    }
    assert LD2.m == 4


def test_join_is_regularized_union():
    i0 = LX3.index_of_mask[0b001]
    i1 = LX3.index_of_mask[0b010]
    assert LX3.element(LX3.join[i0][i1]) == frozenset({0, 1, 2})


def test_complement_is_interior_of_settheoretic_complement():
    i0 = LX3.index_of_mask[0b001]
    assert LX3.element(LX3.complement[i0]) == frozenset({1})


def test_atoms():
    assert {LX3.element(a) for a in LX3.atoms()} == {frozenset({0}), frozenset({1})}
    assert len(regular_open_lattice(discrete(3)).atoms()) == 3


def test_from_leq_rejects_non_lattices():
    with pytest.raises(NotALattice):
        # two maximal elements, no join
        FiniteLattice.from_leq(3, [(0, 1), (0, 2)])
    with pytest.raises(NotALattice):
        FiniteLattice.from_leq(2, [(0, 1), (1, 0)])


# -- structure checks --------------------------------------------------------------


def test_distributivity():
    assert check_distributive(LX3) == (True, None)
    assert check_distributive(two_chain()) == (True, None)
    ok, witness = check_distributive(diamond_m3())
    assert not ok and witness is not None
    a, b, c = witness
    l = diamond_m3()
    assert l.meet[a][l.join[b][c]] != l.join[l.meet[a][b]][l.meet[a][c]]


def test_boolean_checks_pass_on_fixtures():
    for lat in (LS, LX3, regular_open_lattice(discrete(3))):
        assert check_boolean_algebra(lat) == (True, None)
        assert check_lattice_tables(lat) == (True, None)


def test_boolean_check_reports_doctored_complement():
    lat = regular_open_lattice(discrete(2))
    lat.complement = tuple(lat.complement[0] for _ in range(lat.m))
    ok, witness = check_boolean_algebra(lat)
    assert not ok and witness is not None


def test_wallman_disjunction():
    assert wallman_disjunction(regular_open_lattice(discrete(3))) == (True, None)
    assert wallman_disjunction(LX3) == (True, None)
    assert wallman_disjunction(two_chain()) == (True, None)


# -- the explicit relation -----------------------------------------------------------


def test_well_inside_on_discrete_equals_ge():
    assert well_inside(LD2) == ge_relation(LD2)


def test_well_inside_on_x3_frozen():
    # X is above every closure; every element is above cl(empty); nothing
    # else, because cl({0}) = {0,2} and cl({1}) = {1,2} stick out
    b = LX3.index_of_mask[0b000]
    a0 = LX3.index_of_mask[0b001]
    a1 = LX3.index_of_mask[0b010]
    top = LX3.index_of_mask[0b111]
    assert well_inside(LX3) == frozenset(
        {(b, b), (a0, b), (a1, b), (top, b), (top, a0), (top, a1), (top, top)}
    )
    assert (top, a0) in well_inside(LX3)
    assert (a1, a0) not in well_inside(LX3)


def test_top_bottom_always_well_inside():
    for n in (1, 2, 3):
        for t in enumerate_topologies(EnumerationSpec(n)):
            lat = regular_open_lattice(t)
            assert (lat.top, lat.bottom) in well_inside(lat)


def test_well_inside_matches_literal_closure_containment():
    for t in enumerate_topologies(EnumerationSpec(3)):
        lat = regular_open_lattice(t)
        rel = well_inside(lat)
        elems = lat.elements()
        for f in range(lat.m):
            for g in range(lat.m):
                literal = closure_oracle(t, elems[g]) <= elems[f]
                assert ((f, g) in rel) == literal


# -- R-lattice axioms ------------------------------------------------------------------


def test_powerset_with_ge_is_r_lattice():
    lat = regular_open_lattice(discrete(3))
    assert check_r_lattice(lat, ge_relation(lat)).passed


def test_discrete_well_inside_is_r_lattice():
    assert check_r_lattice(LD2, well_inside(LD2)).passed


def test_empty_relation_fails_existence_only():
    report = check_r_lattice(two_chain(), frozenset())
    failed = [a.name for a in report.axioms if not a.passed]
    assert failed == ["existence"]
    assert report["existence"].witness == (1,)


def test_axiom_witnesses_are_reported():
    # ge on a chain of three: 1 is not well inside itself once interpolation
    # needs a strictly intermediate element? ge satisfies all axioms here,
    # so doctor the relation to break upward monotonicity instead.
    lat = regular_open_lattice(discrete(2))
    rel = frozenset({(lat.bottom, lat.bottom), (lat.top, lat.bottom)}) | frozenset(
        {(a, lat.bottom) for a in lat.atoms()}
    )
    # remove the top pair to break axiom 2: atom <= top but (top, bottom)
    broken = frozenset(p for p in rel if p != (lat.top, lat.bottom))
    report = check_r_lattice(lat, broken)
    assert not report["upward_monotone"].passed


def test_relation_validation():
    with pytest.raises(ValueError):
        check_r_lattice(two_chain(), {(0, 5)})


# -- order isomorphism search -------------------------------------------------------------


def test_isomorphisms_between_four_element_algebras():
    isos = find_order_isomorphisms(LX3, LD2)
    assert len(isos) == 2  # identity on {bottom, top} with the atom swap
    for phi in isos:
        for i in range(LX3.m):
            for j in range(LX3.m):
                assert LX3.leq(i, j) == LD2.leq(phi[i], phi[j])


def test_no_isomorphism_across_sizes():
    assert find_order_isomorphisms(LS, LD2) == []


def test_self_isomorphisms_contain_identity_and_close_under_inverse():
    for lat in (LS, LX3, regular_open_lattice(discrete(3))):
        autos = find_order_isomorphisms(lat, lat)
        assert tuple(range(lat.m)) in autos
        for phi in autos:
            inverse = tuple(phi.index(i) for i in range(lat.m))
            assert inverse in autos


def test_transport_relation():
    phi = find_order_isomorphisms(LX3, LD2)[0]
    moved = transport_relation(well_inside(LX3), phi)
    assert len(moved) == len(well_inside(LX3))
    assert moved != well_inside(LD2)  # the gallery's diagnosis, in miniature


# -- every enumerated R(X) is a distributive Boolean algebra -------------------------------


@pytest.mark.parametrize("n", [1, 2, 3])
def test_all_regular_open_lattices_boolean(n):
    for t in enumerate_topologies(EnumerationSpec(n)):
        lat = regular_open_lattice(t)
        assert check_boolean_algebra(lat) == (True, None)
        assert check_distributive(lat) == (True, None)
        assert check_lattice_tables(lat) == (True, None)
        # elements really are the regular opens, independently recomputed
        regs = {
            a
            for a in opens_as_sets(t)
            if interior_oracle(t, closure_oracle(t, a)) == a
        }
        assert set(lat.elements()) == regs
