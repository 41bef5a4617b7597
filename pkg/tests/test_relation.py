from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import any_relations, reflexive_relations
from roughdm import catalog
from roughdm.relation import (
    SAMPLE_LANGUAGE_TABLE,
    BinaryRelation,
    RelationError,
    classify_relation,
    clinker_from_irredundant_covering,
    core,
    equivalence_from_partition,
    format_subset,
    full,
    generate,
    identity,
    information_system,
    inverse,
    is_irredundant_covering,
    mask_of,
    misclassification,
    random_quasiorder,
    reflexive_transitive_closure,
    singletons,
    tolerance_from_covering,
)


def m(*xs):
    return mask_of(x - 1 for x in xs)


def test_inverse_of_distributive_ten():
    inv = inverse(catalog.DISTRIBUTIVE_TEN)
    assert inv.succ == (m(1, 2, 4), m(1, 2), m(2, 3, 4), m(4))


def test_classification_examples():
    f = classify_relation(catalog.TWO_BY_TWO_BY_THREE)
    assert f.reflexive and not f.symmetric and not f.transitive
    f = classify_relation(catalog.STONE_NOT_REGULAR)
    assert f.reflexive and not f.symmetric and not f.transitive
    assert classify_relation(identity(4)).equivalence
    assert classify_relation(full(3)).equivalence


def test_singletons():
    assert singletons(catalog.TWO_BY_THREE) == m(2)
    assert singletons(catalog.STONE_NOT_REGULAR) == 0
    assert singletons(identity(5)) == (1 << 5) - 1


def test_core_definition_by_scan():
    R = catalog.DISTRIBUTIVE_TEN
    for x in range(R.n):
        expected = 0
        for w in range(R.n):
            if R.succ[x] >> w & 1 and all(R.succ[x] & ~R.succ[y] == 0 for y in range(R.n) if R.succ[y] >> w & 1):
                expected |= 1 << w
        assert core(R, x) == expected


def test_format_subset():
    assert format_subset(0) == "∅"
    assert format_subset(m(1, 3)) == "13"
    assert format_subset(m(1, 2), labels=["en", "fr"]) == "en,fr"


def test_validation_errors():
    with pytest.raises(RelationError):
        BinaryRelation(0, ())
    with pytest.raises(RelationError):
        BinaryRelation(2, (1, 8))
    with pytest.raises(RelationError):
        BinaryRelation.from_neighborhoods([[0], [0]], reflexive=True)
    with pytest.raises(RelationError):
        BinaryRelation.from_neighborhoods([[1, 4]], one_based=True)
    with pytest.raises(RelationError):
        BinaryRelation(65, tuple(1 << i for i in range(65)))


def test_equivalence_from_partition():
    R = equivalence_from_partition(3, [{1, 2}, {3}], one_based=True)
    assert R.succ == (m(1, 2), m(1, 2), m(3))
    with pytest.raises(RelationError):
        equivalence_from_partition(3, [{1, 2}, {2, 3}], one_based=True)


def test_tolerance_and_irredundant_covering():
    R = tolerance_from_covering(4, [{1, 2}, {1, 3}, {1, 4}], irredundant=True, one_based=True)
    assert classify_relation(R).tolerance
    assert R.succ[0] == m(1, 2, 3, 4) and R.succ[1] == m(1, 2)
    assert is_irredundant_covering(4, [m(1, 2), m(1, 3), m(1, 4)])
    assert not is_irredundant_covering(4, [m(1, 2), m(2, 3), m(3, 4)])
    assert not is_irredundant_covering(3, [m(1, 2), m(2, 3), m(1, 3), m(2)])
    with pytest.raises(RelationError):
        tolerance_from_covering(3, [{1, 2}, {2}, {3}], irredundant=True, one_based=True)


def test_clinker_reproduces_irredundant_cover():
    R = clinker_from_irredundant_covering(4, [{1, 2}, {1, 3}, {1, 4}], [0, 0, 1, 2], one_based=True)
    assert sorted(set(inverse(R).succ)) == sorted({m(1, 2), m(1, 3), m(1, 4)})
    assert R.is_reflexive()


def test_misclassification_and_information_system():
    assert misclassification({"en", "fr"}, {"en"}) == Fraction(1, 2)
    assert misclassification(set(), {"en"}) == 0
    R = information_system(SAMPLE_LANGUAGE_TABLE, 0.25)
    assert R.is_reflexive()
    # {en,fr} vs {en,fr,de}: 0; vs {fi,sv,en}: 1/2; {en,fr,de} vs {en,fr}: 1/3
    assert R.succ[0] == m(1, 2, 4)
    assert R.succ[1] == m(2, 4)
    # a larger threshold can only relate more objects
    assert all(a & ~b == 0 for a, b in zip(information_system(SAMPLE_LANGUAGE_TABLE, 0).succ, R.succ))
    with pytest.raises((RelationError, ValueError)):
        information_system(SAMPLE_LANGUAGE_TABLE, 1.5)


@pytest.mark.parametrize("kind", ["identity", "full", "random-reflexive", "random-quasiorder",
                                  "tolerance", "equivalence", "clinker"])
def test_generate_kinds_are_reflexive_and_deterministic(kind):
    a = generate(kind, 5, seed=3)
    b = generate(kind, 5, seed=3)
    assert a == b and a.is_reflexive()


def test_generate_rejects_unknown_kind():
    with pytest.raises(RelationError):
        generate("bogus", 3)


@given(st.integers(1, 7), st.integers(0, 2**32))
def test_random_quasiorder_is_quasiorder(n, seed):
    assert classify_relation(random_quasiorder(n, 0.3, seed=seed)).quasiorder


@given(any_relations())
def test_inverse_is_involution(R):
    assert inverse(inverse(R)) == R
    assert set(inverse(R).pairs()) == {(y, x) for x, y in R.pairs()}


@given(reflexive_relations())
def test_closure_is_quasiorder_containing_relation(R):
    C = reflexive_transitive_closure(R)
    assert classify_relation(C).quasiorder
    assert set(R.pairs()) <= set(C.pairs())


@given(reflexive_relations())
def test_core_lies_in_neighbourhood(R):
    for x in range(R.n):
        assert core(R, x) & ~R.succ[x] == 0
