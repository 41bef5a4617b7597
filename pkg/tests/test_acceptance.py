"""Acceptance criteria 1-9.

Each test carries a ``criterion`` marker; the conftest prints one PASS/FAIL
line per criterion at the end of the run.  Running this file directly does
the same.
"""

import random
import time

import pytest

from roughdm import catalog
from roughdm.approx import law_suite
from roughdm.cli_io import analyze
from roughdm.families import family_irreducibles, kernel_K, upper_pseudocomplement
from roughdm.latticecore import classify, kleene_violations, p_algebra_violations, product_chain, is_isomorphic, two_levels
from roughdm.relation import classify_relation, mask_of, random_quasiorder, random_reflexive
from roughdm.roughlattice import RoughPair, build_dmrs
from roughdm.verify import CampaignConfig, run_campaign


def m(*xs):
    """1-based elements to a mask."""
    return mask_of(x - 1 for x in xs)


def report_line(number, ok, detail=""):
    print(f"criterion {number}: {'PASS' if ok else 'FAIL'} {detail}")


@pytest.fixture(scope="module")
def gate_campaign():
    cfg = CampaignConfig(n_min=1, n_max=6, samples=1000, seed=2024)
    start = time.perf_counter()
    result = run_campaign(cfg)
    return result, time.perf_counter() - start


@pytest.mark.criterion(1, "three-point example: |RS| = |DM(RS)| = 6, clinker, regular double Stone, 2x3")
def test_criterion_1_two_by_three():
    start = time.perf_counter()
    R = catalog.TWO_BY_THREE
    rep = analyze(R)
    elapsed = time.perf_counter() - start
    ok = (rep.rs_size == 6 and rep.dm_size == 6 and rep.conditions["clinker"]["holds"]
          and rep.algebra["regular_double_stone"] and "2x3" in rep.isomorphic_to and elapsed < 1.0)
    report_line(1, ok, f"({elapsed:.3f}s)")
    assert rep.rs_size == rep.dm_size == 6
    assert rep.conditions["clinker"]["holds"]
    assert rep.algebra["regular_double_stone"]
    assert rep.isomorphic_to == ["2x3"]
    assert elapsed < 1.0


@pytest.mark.criterion(2, "four-point distributive example: K(B), B*, (A,B)*, (A,B)+")
def test_criterion_2_pseudocomplements():
    start = time.perf_counter()
    R = catalog.DISTRIBUTIVE_TEN
    S = build_dmrs(R)
    B = m(2, 3, 4)
    K = kernel_K(R, B, S.upper)
    Bstar = upper_pseudocomplement(R, B, S.upper)
    star = S.pseudo(RoughPair(m(3), m(2, 3, 4)))
    plus = S.dual_pseudo(RoughPair(m(1), m(1, 2, 4)))
    elapsed = time.perf_counter() - start
    ok = (K == m(3, 4) and Bstar == m(1, 2) and star == (0, m(1, 2))
          and plus == (m(3, 4), m(1, 2, 3, 4)) and elapsed < 1.0)
    report_line(2, ok, f"({elapsed:.3f}s)")
    assert K == m(3, 4)
    assert Bstar == m(1, 2)
    assert star == RoughPair(0, m(1, 2))
    assert plus == RoughPair(m(3, 4), m(1, 2, 3, 4))
    assert elapsed < 1.0


@pytest.mark.criterion(3, "single-atom example: one atom {1}, Stone, not regular, not two-level")
def test_criterion_3_stone_not_regular():
    start = time.perf_counter()
    R = catalog.STONE_NOT_REGULAR
    S = build_dmrs(R)
    atoms = family_irreducibles(S.upper).atoms
    rep = classify(S.lattice)
    tl = two_levels(S.lattice)
    elapsed = time.perf_counter() - start
    ok = atoms == [m(1)] and rep["stone"] and not rep["regular_condition_M"] and not tl and elapsed < 1.0
    report_line(3, ok, f"({elapsed:.3f}s)")
    assert atoms == [m(1)]
    assert rep["stone"]
    assert not rep["regular_condition_M"]
    assert not tl
    assert elapsed < 1.0


@pytest.mark.criterion(4, "irredundant-covering example: |RS| = 12, 2x2x3, rSt, clinker, regular double Stone")
def test_criterion_4_two_by_two_by_three():
    start = time.perf_counter()
    R = catalog.TWO_BY_TWO_BY_THREE
    rep = analyze(R)
    S = build_dmrs(R)
    iso = is_isomorphic(S.lattice, product_chain([2, 2, 3]))
    elapsed = time.perf_counter() - start
    ok = (rep.rs_size == 12 and iso is not None and rep.conditions["rSt"]["holds"]
          and rep.conditions["clinker"]["holds"] and rep.algebra["regular_double_stone"] and elapsed < 1.0)
    report_line(4, ok, f"({elapsed:.3f}s)")
    assert rep.rs_size == 12
    assert iso is not None
    assert rep.conditions["rSt"]["holds"] and rep.conditions["clinker"]["holds"]
    assert rep.algebra["regular_double_stone"]
    assert elapsed < 1.0


@pytest.mark.criterion(5, "theorem gate: T1-T10, exhaustive n <= 3 and 1000 samples for n = 4, 5, 6, deterministic, < 5 min")
def test_criterion_5_theorem_gate(gate_campaign):
    result, elapsed = gate_campaign
    counts = result.counts
    exhaustive = 1 + 4 + 64
    evaluated_all = all(counts[t]["evaluated"] + counts[t]["out_of_scope"] == exhaustive + 3000 for t in counts)
    # determinism: a smaller configuration run twice, once split over two workers
    small = dict(n_min=1, n_max=4, samples=60, seed=7)
    d1 = run_campaign(**small).digest()
    d2 = run_campaign(**small).digest()
    d3 = run_campaign(**small, jobs=2).digest()
    ok = result.ok and len(counts) == 10 and evaluated_all and d1 == d2 == d3 and elapsed < 300
    report_line(5, ok, f"({result.cases} relations, {elapsed:.1f}s, failures={len(result.failures)})")
    assert result.failures == []
    assert result.cases == exhaustive + 3000
    assert sorted(counts, key=lambda t: int(t[1:])) == [f"T{i}" for i in range(1, 11)]
    assert evaluated_all
    assert d1 == d2 == d3
    assert elapsed < 300


@pytest.mark.criterion(6, "oracle equivalence on distributive instances and DM(RS) = cut completion")
def test_criterion_6_oracles(gate_campaign):
    result, _ = gate_campaign
    t6, t7 = result.counts["T6"], result.counts["T7"]
    ok = t6["failed"] == 0 and t7["failed"] == 0 and t6["evaluated"] == result.cases == t7["evaluated"]
    report_line(6, ok, f"(T6 {t6['passed']}/{t6['evaluated']}, T7 {t7['passed']}/{t7['evaluated']})")
    assert t6["failed"] == 0 and t7["failed"] == 0
    assert t6["evaluated"] == result.cases == t7["evaluated"]


@pytest.mark.criterion(7, "law suite, p-algebra identities and Kleene laws without violations")
def test_criterion_7_laws():
    rng = random.Random(77)
    bad = []
    relations = [random_reflexive(n, rng.uniform(0.05, 0.5), seed=rng.getrandbits(32))
                 for n in range(1, 13) for _ in range(3)]
    relations += list(catalog.NAMED.values())
    for R in relations:
        rep = law_suite(R)
        if R.n <= 12 and not rep.exhaustive:
            bad.append(("not exhaustive", R))
        if not rep.ok:
            bad.append((rep.violations, R))
        if R.n <= 7:
            L = build_dmrs(R).lattice
            if L.is_pseudocomplemented and p_algebra_violations(L):
                bad.append((p_algebra_violations(L), R))
            if L.negation is not None and kleene_violations(L):
                bad.append((kleene_violations(L), R))
    report_line(7, not bad, f"({len(relations)} relations, {len(bad)} problems)")
    assert bad == []


@pytest.mark.criterion(8, "quasiorder identities on 200 random quasiorders")
def test_criterion_8_quasiorders():
    rng = random.Random(8)
    bad = []
    count = 0
    while count < 200:
        n = rng.randint(1, 7)
        R = random_quasiorder(n, rng.uniform(0.05, 0.4), seed=rng.getrandbits(32))
        assert classify_relation(R).quasiorder
        count += 1
        S = build_dmrs(R)
        ap, top = S.ap, S.top
        for B in S.upper.members:
            if upper_pseudocomplement(R, B, S.upper) != top & ~ap.upper_inv(B):
                bad.append(("B*", R, B))
        for p in S.pairs:
            Bd = ap.upper_inv(p.upper)
            if S.pseudo(p) != RoughPair(top & ~ap.upper(Bd), top & ~Bd):
                bad.append(("(A,B)*", R, p))
    report_line(8, not bad, f"({count} quasiorders)")
    assert bad == []


@pytest.mark.criterion(9, "all worked examples reproduce at full scale")
def test_criterion_9_full_scale():
    sizes = {name: R.n for name, R in catalog.NAMED.items()}
    start = time.perf_counter()
    reports = {name: analyze(R) for name, R in catalog.NAMED.items()}
    elapsed = time.perf_counter() - start
    expected_dm = {"two_by_three": 6, "distributive_ten": 10, "stone_not_regular": 9, "two_by_two_by_three": 12}
    ok = max(sizes.values()) <= 4 and all(reports[k].dm_size == v for k, v in expected_dm.items())
    report_line(9, ok, f"({elapsed:.3f}s for all examples)")
    assert max(sizes.values()) <= 4
    assert {k: r.dm_size for k, r in reports.items()} == expected_dm
    assert all(r.rs_equals_dm for r in reports.values())


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(pytest.main([__file__, "-q"]))
