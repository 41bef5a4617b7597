import pytest
from hypothesis import given

from conftest import reflexive_relations
from roughdm import catalog
from roughdm.approx import Approximations
from roughdm.families import HypothesisError
from roughdm.latticecore import ResourceCapError, is_isomorphic, product_chain
from roughdm.relation import BinaryRelation, RelationError, identity, mask_of, random_reflexive
from roughdm.roughlattice import RoughPair, build_dmrs, dmrs_irreducibles, dmrs_ops, enumerate_rs, g_map_and_partition


def m(*xs):
    return mask_of(x - 1 for x in xs)


def P(a, b):
    return RoughPair(a, b)


def test_two_by_three_structure():
    S = build_dmrs(catalog.TWO_BY_THREE)
    assert len(S.rs) == len(S) == 6 and S.rs_equals_dmrs
    assert is_isomorphic(S.lattice, product_chain([2, 3])) is not None
    g = g_map_and_partition(S)
    assert g.ok
    assert [S.pairs[j] for j in g.jminus] == [P(0, m(1, 3))]
    assert [S.pairs[j] for j in g.jzero] == [P(m(2), m(1, 2))]
    assert [S.pairs[j] for j in g.jplus] == [P(m(3), m(1, 3))]


def test_distributive_ten_operations():
    S = build_dmrs(catalog.DISTRIBUTIVE_TEN)
    assert len(S) == len(S.rs) == 10 and S.is_distributive
    assert S.pseudo(P(m(3), m(2, 3, 4))) == P(0, m(1, 2))
    assert S.dual_pseudo(P(m(1), m(1, 2, 4))) == P(m(3, 4), m(1, 2, 3, 4))
    assert dmrs_ops(S, P(m(3), m(2, 3, 4)), op="pseudo") == P(0, m(1, 2))
    top = m(1, 2, 3, 4)
    assert S.kleene_not(P(m(3), m(2, 3, 4))) == P(m(1), top & ~m(3))


def test_two_by_two_by_three():
    S = build_dmrs(catalog.TWO_BY_TWO_BY_THREE)
    assert len(S.rs) == 12
    assert is_isomorphic(S.lattice, product_chain([2, 2, 3])) is not None


def test_four_chain_has_a_comparable_fixed_point():
    # DM(RS) is the 4-element chain; its middle join-irreducible is fixed by g
    R = BinaryRelation.from_neighborhoods([[0, 1], [1]])
    S = build_dmrs(R)
    assert len(S) == 4
    g = S.g_map_and_partition()
    assert g.ok and len(g.jzero) == 1


def test_reflexivity_required():
    with pytest.raises(RelationError):
        build_dmrs(BinaryRelation(2, (0b10, 0b01)))


def test_caps():
    with pytest.raises(ResourceCapError):
        build_dmrs(identity(6), pair_cap=10)
    with pytest.raises(ResourceCapError):
        enumerate_rs(identity(6), cap=5)


def test_closed_forms_refuse_non_distributive():
    for seed in range(300):
        S = build_dmrs(random_reflexive(4, 0.4, seed=seed))
        if not S.is_distributive:
            break
    else:  # pragma: no cover
        pytest.fail("no non-distributive example found")
    with pytest.raises(HypothesisError):
        S.pseudo(S.pairs[1])
    with pytest.raises(HypothesisError):
        S.g_map_and_partition()


def test_index_rejects_non_member():
    S = build_dmrs(catalog.TWO_BY_THREE)
    with pytest.raises(ValueError):
        S.index(P(m(1), 0))
    with pytest.raises(ValueError):
        S.op("bogus", S.pairs[0])


@given(reflexive_relations(max_n=5))
def test_rs_inside_completion(R):
    S = build_dmrs(R)
    ap = Approximations(R)
    for X in range(1 << R.n):
        assert P(ap.lower(X), ap.upper(X)) in S
    assert S.exists_pair_failures() == []


@given(reflexive_relations(max_n=5))
def test_meet_and_join_are_bounds(R):
    S = build_dmrs(R)
    L = S.lattice
    for a in range(len(S)):
        for b in range(len(S)):
            assert S.index(S.meet(S.pairs[a], S.pairs[b])) == L.meet[a, b]
            assert S.index(S.join(S.pairs[a], S.pairs[b])) == L.join[a, b]
            assert L.leq[L.meet[a, b], a] and L.leq[a, L.join[a, b]]


@given(reflexive_relations(max_n=5))
def test_formulas_match_scans_when_distributive(R):
    S = build_dmrs(R)
    if not S.is_distributive:
        return
    for p in S.pairs:
        assert S.pseudo(p) == S.oracle_pseudo(p)
        assert S.dual_pseudo(p) == S.oracle_dual_pseudo(p)
    assert dmrs_irreducibles(S) == S.irreducibles_lattice()
    assert S.g_map_and_partition().ok
