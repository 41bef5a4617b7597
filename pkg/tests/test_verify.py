import json

import pytest

from roughdm import catalog
from roughdm import verify
from roughdm.relation import BinaryRelation, identity
from roughdm.verify import (
    THEOREMS,
    CampaignConfig,
    TheoremCase,
    all_reflexive,
    evaluate,
    minimize_witness,
    resolve_theorems,
    run_campaign,
)


def test_exhaustive_small_universes_cover_every_relation():
    assert sum(1 for _ in all_reflexive(3)) == 64
    assert len(set(all_reflexive(3))) == 64
    assert all(R.is_reflexive() for R in all_reflexive(3))


@pytest.mark.parametrize("tid", list(THEOREMS))
def test_each_theorem_exhaustive_up_to_three(tid):
    result = run_campaign(n_min=1, n_max=3, theorems=[tid])
    assert result.ok, result.failures
    assert result.cases == 69
    c = result.counts[tid]
    assert c["evaluated"] + c["out_of_scope"] == 69 and c["evaluated"] > 0


def test_named_examples_are_consistent():
    for R in catalog.NAMED.values():
        for tid in THEOREMS:
            issues = evaluate(R, tid)
            assert not issues, (tid, issues)
    # the single-atom example is in scope for the distributive-only theorems
    assert evaluate(catalog.STONE_NOT_REGULAR, "T2") == []
    assert evaluate(catalog.STONE_NOT_REGULAR, "T8") == []


def test_quasiorder_theorem_out_of_scope_for_non_quasiorders():
    assert evaluate(catalog.TWO_BY_THREE, "T9") is None


def test_campaign_is_deterministic_and_parallel_safe():
    cfg = dict(n_min=2, n_max=5, samples=40, seed=11)
    a = run_campaign(**cfg)
    b = run_campaign(**cfg)
    c = run_campaign(**cfg, jobs=3)
    assert a.digest() == b.digest() == c.digest()
    assert a.as_dict(timing=False) == c.as_dict(timing=False)
    assert run_campaign(**{**cfg, "seed": 12}).digest() != a.digest()


def test_result_json_and_config_round_trip():
    r = run_campaign(n_min=1, n_max=2, theorems="T1,T4")
    doc = json.loads(r.to_json())
    assert doc["ok"] and set(doc["counts"]) == {"T1", "T4"}
    assert "elapsed_seconds" in doc
    cfg = CampaignConfig.from_dict(doc["config"])
    assert cfg.as_dict() == doc["config"]
    assert CampaignConfig.from_dict({"n_range": [2, 4]}).n_max == 4


def test_config_errors():
    with pytest.raises(ValueError):
        resolve_theorems("T1,bogus")
    with pytest.raises(ValueError):
        CampaignConfig(n_max=9)
    with pytest.raises(ValueError):
        CampaignConfig(classes=("nonsense",))
    with pytest.raises(ValueError):
        CampaignConfig(jobs=0)
    assert resolve_theorems("all") == list(THEOREMS)
    assert resolve_theorems("t3, T3") == ["T3"]


# -- witness minimization against a deliberately broken case ------------------------------

BROKEN = TheoremCase(
    "T4",
    "rSt <=> clinker, with a clinker test that wrongly rejects universes of three or more points",
    lambda inst: True,
    {
        "rSt": lambda i: i.conditions["rSt"].holds,
        "broken_clinker": lambda i: i.conditions["clinker"].holds and i.R.n < 3,
    },
)


def test_minimize_shrinks_a_failing_instance():
    R = catalog.TWO_BY_TWO_BY_THREE
    assert evaluate(R, BROKEN)
    small = minimize_witness(R, BROKEN)
    assert small.n == 3
    assert evaluate(small, BROKEN)
    # locally minimal: no further single deletion keeps the failure
    for x, y in small.pairs():
        if x != y:
            succ = list(small.succ)
            succ[x] &= ~(1 << y)
            assert not evaluate(BinaryRelation(small.n, tuple(succ)), BROKEN)


def test_minimize_rejects_passing_input():
    with pytest.raises(ValueError):
        minimize_witness(identity(3), "T4")


def test_minimize_with_custom_checker():
    R = catalog.STONE_NOT_REGULAR
    small = minimize_witness(R, "T4", checker=lambda S: len(S.pairs()) >= 2)
    assert small.n == 1 or len(small.pairs()) == 2


def test_campaign_reports_injected_bug(monkeypatch):
    monkeypatch.setitem(verify.THEOREMS, "T4", BROKEN)
    result = run_campaign(n_min=3, n_max=4, samples=20, theorems=["T4"], seed=5)
    assert not result.ok
    f = result.failures[0]
    assert f["theorem"] == "T4" and f["n"] == 3 and "sides disagree" in f["issues"][0]
    assert len(f["minimized"]) == 3
    assert "defect in this implementation" in result.to_json()
