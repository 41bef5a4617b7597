import pytest
from hypothesis import given

from conftest import reflexive_relations
from roughdm import catalog
from roughdm.families import (
    HypothesisError,
    brute_dual_pseudocomplement,
    brute_pseudocomplement,
    build_family,
    family_irreducibles,
    kernel_K,
    lower_dual_pseudocomplement,
    union_closure,
    upper_pseudocomplement,
)
from roughdm.latticecore import ResourceCapError
from roughdm.relation import BinaryRelation, full, identity, mask_of


def m(*xs):
    return mask_of(x - 1 for x in xs)


def test_upper_family_of_single_atom_example():
    F = build_family(catalog.STONE_NOT_REGULAR, "upper")
    assert set(F.members) == {0, m(1), m(1, 2, 3), m(1, 3, 4), m(1, 2, 3, 4)}
    assert family_irreducibles(F).atoms == [m(1)]


def test_upper_family_of_distributive_ten():
    R = catalog.DISTRIBUTIVE_TEN
    F = build_family(R, "upper")
    irr = family_irreducibles(F)
    assert sorted(irr.atoms) == sorted([m(4), m(1, 2)])
    assert not irr.is_boolean and irr.is_distributive
    assert F.meet([m(1, 2, 4), m(2, 3, 4)]) == m(4)
    assert F.join([m(1, 2), m(4)]) == m(1, 2, 4)


def test_kernel_and_pseudocomplement_of_distributive_ten():
    R = catalog.DISTRIBUTIVE_TEN
    F = build_family(R, "upper")
    assert kernel_K(R, m(2, 3, 4), F) == m(3, 4)
    assert upper_pseudocomplement(R, m(2, 3, 4), F) == m(1, 2)


def test_empty_meet_and_join():
    F = build_family(catalog.TWO_BY_THREE, "lower")
    assert F.meet([]) == F.top and F.join([]) == F.bottom


def test_non_member_rejected():
    F = build_family(catalog.STONE_NOT_REGULAR, "upper")
    with pytest.raises(ValueError):
        F.position(m(2))
    with pytest.raises(ValueError):
        build_family(identity(2), "sideways")


def test_family_cap():
    with pytest.raises(ResourceCapError):
        union_closure([1 << i for i in range(12)], cap=100)


def test_formula_refuses_non_distributive_family():
    R = None
    for seed in range(200):
        from roughdm.relation import random_reflexive

        cand = random_reflexive(4, 0.4, seed=seed)
        if not build_family(cand, "upper").lattice.is_distributive:
            R = cand
            break
    assert R is not None
    with pytest.raises(HypothesisError):
        upper_pseudocomplement(R, build_family(R, "upper").members[1])


def test_boolean_families():
    for R in (identity(3), full(3), catalog.TWO_BY_THREE):
        irr = family_irreducibles(build_family(R, "upper"))
        assert irr.is_boolean and irr.is_boolean_by_atoms


@given(reflexive_relations(max_n=5))
def test_members_are_exactly_the_approximations(R):
    from roughdm.approx import Approximations

    ap = Approximations(R)
    subsets = range(1 << R.n)
    assert set(build_family(R, "upper").members) == {ap.upper(X) for X in subsets}
    assert set(build_family(R, "lower").members) == {ap.lower(X) for X in subsets}
    assert set(build_family(R, "upper_inv").members) == {ap.upper_inv(X) for X in subsets}
    assert set(build_family(R, "lower_inv").members) == {ap.lower_inv(X) for X in subsets}


@given(reflexive_relations(max_n=5))
def test_meets_and_joins_are_bounds(R):
    for kind in ("upper", "lower"):
        F = build_family(R, kind)
        for X in F.members:
            for Y in F.members:
                lo, hi = F.meet([X, Y]), F.join([X, Y])
                assert lo in F and hi in F
                assert lo & ~X == 0 and lo & ~Y == 0
                assert X & ~hi == 0 and Y & ~hi == 0


@given(reflexive_relations(max_n=5))
def test_pseudocomplement_formulas_match_scans(R):
    F = build_family(R, "upper")
    if not F.lattice.is_distributive:
        return
    G = build_family(R, "lower")
    for B in F.members:
        assert upper_pseudocomplement(R, B, F) == brute_pseudocomplement(F, B)
    for A in G.members:
        assert lower_dual_pseudocomplement(R, A, F) == brute_dual_pseudocomplement(G, A)


@given(reflexive_relations(max_n=5))
def test_lower_irreducibles_mirror_upper(R):
    top = (1 << R.n) - 1
    up = family_irreducibles(build_family(R, "upper"))
    lo = family_irreducibles(build_family(R, "lower"))
    assert sorted(top & ~X for X in up.join_irreducibles) == sorted(lo.join_irreducibles)
    assert sorted(top & ~X for X in up.atoms) == sorted(lo.atoms)


def test_irreflexive_relation_family():
    F = build_family(BinaryRelation(2, (0b10, 0b01)), "upper")
    assert set(F.members) == {0, 1, 2, 3}
