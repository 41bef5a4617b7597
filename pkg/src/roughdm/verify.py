"""Verification campaigns: evaluate each theorem on batches of generated relations.

A theorem case has a hypothesis filter, a set of sides that must all agree,
and optional identity checks.  A failure always points at a bug in this
package, never at the mathematics; reports say so.

Relations with ``n <= 3`` are enumerated exhaustively.  Larger sizes are
sampled from per-instance seeds derived from ``(seed, n, index)``, so any
partition of the work across processes merges to the same result.
"""

from __future__ import annotations

import hashlib
import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable

import numpy as np

from . import conditions as cond
from .approx import law_suite, quasiorder_identities
from .families import (
    HypothesisError,
    brute_dual_pseudocomplement,
    brute_pseudocomplement,
    kernel_K,
    lower_dual_pseudocomplement,
    upper_pseudocomplement,
)
from .latticecore import (
    FiniteLattice,
    boolean_atom_representation,
    classify,
    dedekind_macneille,
    is_order_isomorphism,
    kleene_violations,
    p_algebra_violations,
    set_representation,
    stone_by_irreducibles,
    stone_characterizations,
    two_levels,
)
from .relation import BinaryRelation, classify_relation, core, generate, is_subset
from .roughlattice import RoughPair, RoughSetSystem

EXHAUSTIVE_MAX_N = 3
DEFAULT_CLASSES = ("random_reflexive", "random_quasiorder", "tolerance", "equivalence", "clinker")


# -- per-relation evaluation context ---------------------------------------------------


class Instance:
    """Lazily computed structures for one relation, shared by all theorem checks."""

    def __init__(self, R: BinaryRelation):
        self.R = R

    @cached_property
    def S(self) -> RoughSetSystem:
        return RoughSetSystem(self.R)

    @cached_property
    def L(self) -> FiniteLattice:
        return self.S.lattice

    @cached_property
    def report(self):
        return classify(self.L)

    @cached_property
    def distributive(self) -> bool:
        return self.L.is_distributive

    @cached_property
    def conditions(self):
        return cond.all_conditions(self.R)

    @cached_property
    def relation_flags(self):
        return classify_relation(self.R)


@dataclass(frozen=True)
class TheoremCase:
    """One checkable result: all ``sides`` agree whenever ``hypothesis`` holds."""

    id: str
    statement: str
    hypothesis: Callable[[Instance], bool]
    sides: dict[str, Callable[[Instance], bool]] = field(default_factory=dict)
    identities: Callable[[Instance], list[str]] | None = None

    def evaluate(self, inst: Instance) -> list[str] | None:
        """None when out of scope, otherwise the list of problems found."""
        if not self.hypothesis(inst):
            return None
        issues: list[str] = []
        values = {name: bool(fn(inst)) for name, fn in self.sides.items()}
        if len(set(values.values())) > 1:
            issues.append("sides disagree: " + ", ".join(f"{k}={v}" for k, v in values.items()))
        if self.identities is not None:
            issues.extend(self.identities(inst))
        return issues


def _always(_inst) -> bool:
    return True


def _dist(inst) -> bool:
    return inst.distributive


# -- T1 ----------------------------------------------------------------------------------


def _t1_extra(inst: Instance) -> list[str]:
    out = []
    if inst.distributive:
        if not inst.L.is_pseudocomplemented:
            out.append("distributive completion without pseudocomplements")
        k = kleene_violations(inst.L)
        if k:
            out.append(f"distributive completion violates Kleene laws: {k[0]}")
    return out


T1 = TheoremCase(
    "T1",
    "upper family Boolean <=> completion distributive and regular <=> distributive with at most two levels of J",
    _always,
    {
        "upper_family_boolean": lambda i: i.S.upper_irreducibles.is_boolean,
        "distributive_and_regular": lambda i: i.distributive and i.report["regular_condition_M"],
        "distributive_and_two_levels": lambda i: i.distributive and two_levels(i.L),
    },
    _t1_extra,
)


# -- T2 ----------------------------------------------------------------------------------


def _t2_extra(inst: Instance) -> list[str]:
    c = inst.conditions
    out = []
    if c["St1"].holds != c["St1°"].holds:
        out.append("St1 and its atom form disagree")
    if c["St2"].holds != c["St2°"].holds:
        out.append("St2 and its atom form disagree")
    if inst.report["stone"]:
        F = inst.S.upper
        if not classify(F.lattice)["stone"]:
            out.append("completion is Stone but the upper family is not")
        ap, top = inst.S.ap, inst.S.top
        for B in F.members:
            bs = brute_pseudocomplement(F, B)
            bss = brute_pseudocomplement(F, bs)
            if ap.lower_inv(bs) | ap.lower_inv(bss) != top:
                out.append(f"B*▽ and B**▽ do not cover the universe for B={B:#b}")
                break
    return out


T2 = TheoremCase(
    "T2",
    "for distributive completions: St1 <=> St2 <=> Stone",
    _dist,
    {
        "St1": lambda i: i.conditions["St1"].holds,
        "St2": lambda i: i.conditions["St2"].holds,
        "stone": lambda i: i.report["stone"],
    },
    _t2_extra,
)


# -- T3, T4 --------------------------------------------------------------------------------


def _t3_extra(inst: Instance) -> list[str]:
    if inst.conditions["rSt"].holds and not cond.upper_inv_decomposition(inst.R).holds:
        return ["rSt holds but some {x}△ is not a union of sets with nonempty core"]
    return []


T3 = TheoremCase(
    "T3",
    "rSt <=> completion is a distributive regular double Stone algebra",
    _always,
    {
        "rSt": lambda i: i.conditions["rSt"].holds,
        "regular_double_stone": lambda i: i.distributive and i.report.regular_double_stone,
    },
    _t3_extra,
)

T4 = TheoremCase(
    "T4",
    "rSt <=> the sets {x}▲ form an irredundant covering",
    _always,
    {
        "rSt": lambda i: i.conditions["rSt"].holds,
        "clinker": lambda i: i.conditions["clinker"].holds,
    },
)


# -- T5 ----------------------------------------------------------------------------------


def _t5(inst: Instance) -> list[str]:
    if inst.L.negation is None:
        return ["distributive completion not closed under the rough-set negation"]
    return list(inst.S.g_map_and_partition().issues)


T5 = TheoremCase("T5", "g-map properties and closed forms of the J partition", _dist, {}, _t5)


# -- T6 ----------------------------------------------------------------------------------


def _t6(inst: Instance) -> list[str]:
    S, L = inst.S, inst.L
    out = []
    try:
        rs_idx = S.rs_indices
    except ValueError as exc:
        return [f"rough set missing from the completion: {exc}"]
    rs = S.rs
    A = np.array([[p.lower >> k & 1 for k in range(S.n)] for p in rs], dtype=np.int32)
    B = np.array([[p.upper >> k & 1 for k in range(S.n)] for p in rs], dtype=np.int32)
    rs_leq = ((A @ (1 - A).T) == 0) & ((B @ (1 - B).T) == 0)
    comp = dedekind_macneille(rs, rs_leq)
    mapping = []
    for cut in comp.cuts:
        members = [rs_idx[k] for k in range(len(rs)) if cut >> k & 1]
        mapping.append(L.join_of(members))
    if not is_order_isomorphism(comp.lattice, L, mapping):
        out.append(f"cut completion ({len(comp.cuts)} cuts) is not order isomorphic to DM(RS) ({len(L)})")
    if any(mapping[comp.embedding[k]] != rs_idx[k] for k in range(len(rs))):
        out.append("the isomorphism does not fix the rough sets")
    missing = S.exists_pair_failures()
    if missing:
        out.append(f"pairs (A, A△▲) or (B▽▼, B) missing: {missing[:3]}")
    ordered = FiniteLattice(S.pairs, L.leq)
    if not (ordered.meet == L.meet).all() or not (ordered.join == L.join).all():
        out.append("formula meet/join tables differ from the order-derived tables")
    return out


T6 = TheoremCase("T6", "DM(RS) equals the cut completion of RS", _always, {}, _t6)


# -- T7 ----------------------------------------------------------------------------------


def _family_iso(src, dst, f, antitone=False) -> bool:
    image = [f(X) for X in src.members]
    if sorted(image) != sorted(dst.members) or len(set(image)) != len(image):
        return False
    for X, fX in zip(src.members, image):
        for Y, fY in zip(src.members, image):
            want = is_subset(Y, X) if antitone else is_subset(X, Y)
            if want != is_subset(fX, fY):
                return False
    return True


def _t7(inst: Instance) -> list[str]:
    S, R = inst.S, inst.R
    ap, top = S.ap, S.top
    out = []
    if not _family_iso(S.upper, S.lower_inv, ap.lower_inv):
        out.append("B -> B▽ is not an isomorphism from the upper to the lower_inv family")
    if not _family_iso(S.upper_inv, S.lower, ap.lower):
        out.append("B -> B▼ is not an isomorphism from the upper_inv to the lower family")
    if not _family_iso(S.upper, S.lower, lambda X: top & ~X, antitone=True):
        out.append("complement is not a dual isomorphism from the upper to the lower family")
    if S.upper.lattice.is_distributive != inst.distributive:
        out.append("upper family and completion disagree on distributivity")
    for name, irr in (("upper", S.upper_irreducibles), ("upper_inv", S.upper_inv_irreducibles)):
        if irr.is_boolean != irr.is_boolean_by_atoms:
            out.append(f"{name} family: Boolean test by complements and by atoms disagree")
    if not inst.distributive:
        return out
    # closed forms against scans
    for B in S.upper.members:
        if upper_pseudocomplement(R, B, S.upper) != brute_pseudocomplement(S.upper, B):
            out.append(f"upper-family pseudocomplement formula wrong at {B:#b}")
            break
    for A in S.lower.members:
        if lower_dual_pseudocomplement(R, A, S.upper) != brute_dual_pseudocomplement(S.lower, A):
            out.append(f"lower-family dual pseudocomplement formula wrong at {A:#b}")
            break
    for p in S.pairs:
        if S.pseudo(p) != S.oracle_pseudo(p):
            out.append(f"pseudocomplement formula wrong at {p}")
            break
    for p in S.pairs:
        if S.dual_pseudo(p) != S.oracle_dual_pseudo(p):
            out.append(f"dual pseudocomplement formula wrong at {p}")
            break
    if S.irreducibles_formula() != S.irreducibles_lattice():
        out.append("join-irreducibles or atoms from the relation differ from the lattice scan")
    return out


T7 = TheoremCase("T7", "closed-form operations agree with brute-force scans", _always, {}, _t7)


# -- T8 ----------------------------------------------------------------------------------

T8 = TheoremCase(
    "T8",
    "for distributive completions: J has at most two levels <=> regular",
    _dist,
    {
        "two_levels": lambda i: two_levels(i.L),
        "regular": lambda i: i.report["regular_condition_M"],
    },
)


# -- T9 ----------------------------------------------------------------------------------


def _is_quasiorder(inst: Instance) -> bool:
    return inst.relation_flags.quasiorder


def _t9(inst: Instance) -> list[str]:
    S, R = inst.S, inst.R
    ap, top, inv = S.ap, S.top, S.ap.Rinv
    out = []
    for X in range(1 << R.n):
        bad = [k for k, v in quasiorder_identities(R, X).items() if not v]
        if bad:
            out.append(f"quasiorder identity {bad[0]} fails at {X:#b}")
            break
    for x in range(R.n):
        if not core(R, x) >> x & 1 or not core(inv, x) >> x & 1:
            out.append(f"{x} is not in its own core")
            break
    if not inst.distributive:
        out.append("quasiorder with a non-distributive completion")
        return out
    for B in S.upper.members:
        if kernel_K(R, B, S.upper) != B:
            out.append(f"K(B) != B at {B:#b}")
            break
        if brute_pseudocomplement(S.upper, B) != top & ~ap.upper_inv(B):
            out.append(f"B* != complement of B△ at {B:#b}")
            break
    for p in S.pairs:
        Bd = ap.upper_inv(p.upper)
        want = RoughPair(top & ~ap.upper(Bd), top & ~Bd)
        if S.oracle_pseudo(p) != want:
            out.append(f"(A,B)* != (B△▲ᶜ, B△ᶜ) at {p}")
            break
    return out


T9 = TheoremCase("T9", "identities specific to quasiorders", _is_quasiorder, {}, _t9)


# -- T10 ---------------------------------------------------------------------------------


def _t10(inst: Instance) -> list[str]:
    L, rep = inst.L, inst.report
    out = []
    law = law_suite(inst.R)
    if not law.ok:
        out.append(f"approximation laws violated: {sorted(k for k, v in law.violations.items() if v)}")
    dist = inst.distributive
    holds, witness, _ = L.distributive_by_triples()
    if holds != dist:
        out.append(f"triple scan disagrees with the distributivity test (witness {witness})")
    if (L.find_m3_n5() is None) != dist:
        out.append("M3/N5 search disagrees with the distributivity test")
    if (set_representation(L) is not None) != dist:
        out.append("set representation exists iff distributive: violated")
    if (boolean_atom_representation(L) is not None) != rep["boolean"]:
        out.append("atom representation exists iff Boolean: violated")
    if L.negation is not None:
        nv = kleene_violations(L)
        if nv:
            out.append(f"rough-set negation violates {nv[0][0]}")
    if L.is_pseudocomplemented:
        pv = p_algebra_violations(L)
        if pv:
            out.append(f"p-algebra identity ({pv[0][0]}) fails at {pv[0][1]}")
    if not dist:
        return out
    if rep["boolean"] != (set(L.atoms) == set(L.join_irreducibles)):
        out.append("Boolean <=> atoms equal join-irreducibles: violated")
    if rep["stone"] != stone_by_irreducibles(L)[0]:
        out.append("Stone test by join-irreducibles disagrees with the Stone equation")
    if L.is_pseudocomplemented:
        sl = stone_characterizations(L)
        if len(set(sl.values())) > 1:
            out.append(f"equivalent Stone characterizations disagree: {sl}")
        if rep["stone"] and sorted(L.center) != L.skeleton:
            out.append("Stone algebra whose skeleton is not its center")
    if rep["double_stone"]:
        star, plus = L.pseudocomplements, L.dual_pseudocomplements
        idx = np.arange(len(L))
        if not L.leq[star, plus].all():
            out.append("double Stone algebra with some x* not below x+")
        fixed_star = set(idx[star[star] == idx].tolist())
        fixed_plus = set(idx[plus[plus] == idx].tolist())
        if not set(L.center) == fixed_star == fixed_plus:
            out.append("center, skeleton and dual skeleton differ in a double Stone algebra")
    return out


T10 = TheoremCase("T10", "lattice and approximation identity suite", _always, {}, _t10)

THEOREMS: dict[str, TheoremCase] = {c.id: c for c in (T1, T2, T3, T4, T5, T6, T7, T8, T9, T10)}


def resolve_theorems(spec) -> list[str]:
    """Accept ``"all"``, a comma-separated string or a list of ids; reject unknown ids."""
    if spec is None or spec == "all" or spec == ["all"]:
        return list(THEOREMS)
    if isinstance(spec, str):
        spec = [s.strip() for s in spec.split(",") if s.strip()]
    ids = [s.upper() for s in spec]
    unknown = [s for s, i in zip(spec, ids) if i not in THEOREMS]
    if unknown or not ids:
        raise ValueError(f"unknown theorem id(s) {unknown}; choose from {list(THEOREMS)} or 'all'")
    return list(dict.fromkeys(ids))


def evaluate(R: BinaryRelation, theorem: str | TheoremCase) -> list[str] | None:
    """Run one theorem on one relation; exceptions count as problems."""
    case = THEOREMS[theorem] if isinstance(theorem, str) else theorem
    return _evaluate_case(case, Instance(R))


def _evaluate_case(case: TheoremCase, inst: Instance) -> list[str] | None:
    try:
        return case.evaluate(inst)
    except (HypothesisError, AssertionError, ArithmeticError, ValueError, IndexError) as exc:
        return [f"exception {type(exc).__name__}: {exc}"]


# -- relation sources --------------------------------------------------------------------


def all_reflexive(n: int):
    """Every reflexive relation on ``n`` points, in order of the off-diagonal bit pattern."""
    off = [(x, y) for x in range(n) for y in range(n) if x != y]
    for bits in range(1 << len(off)):
        succ = [1 << x for x in range(n)]
        for k, (x, y) in enumerate(off):
            if bits >> k & 1:
                succ[x] |= 1 << y
        yield BinaryRelation(n, tuple(succ))


def instance_seed(seed: int, n: int, index: int) -> int:
    digest = hashlib.sha256(f"{seed}:{n}:{index}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


def sample_relation(cls: str, n: int, seed: int) -> BinaryRelation:
    rng = random.Random(seed)
    if cls == "random_reflexive":
        return generate("random_reflexive", n, seed, density=rng.uniform(0.05, 0.6))
    if cls == "random_quasiorder":
        return generate("random_quasiorder", n, seed, density=rng.uniform(0.05, 0.4))
    if cls == "tolerance":
        return generate("tolerance_from_covering", n, seed)
    if cls == "equivalence":
        return generate("equivalence_from_partition", n, seed)
    if cls == "clinker":
        return generate("clinker_from_irredundant_covering", n, seed)
    raise ValueError(f"unknown relation class {cls!r}; choose from {DEFAULT_CLASSES}")


# -- campaign ----------------------------------------------------------------------------


@dataclass
class CampaignConfig:
    n_min: int = 1
    n_max: int = 6
    samples: int = 1000
    seed: int = 0
    classes: tuple[str, ...] = DEFAULT_CLASSES
    theorems: tuple[str, ...] = tuple(THEOREMS)
    jobs: int = 1
    minimize: bool = True
    max_failures: int = 20

    def __post_init__(self):
        spec = self.theorems if isinstance(self.theorems, str) else list(self.theorems)
        self.theorems = tuple(resolve_theorems(spec))
        self.classes = tuple(self.classes)
        for c in self.classes:
            if c not in DEFAULT_CLASSES:
                raise ValueError(f"unknown relation class {c!r}; choose from {DEFAULT_CLASSES}")
        if not 1 <= self.n_min <= self.n_max <= 8:
            raise ValueError("need 1 <= n_min <= n_max <= 8")
        if self.samples < 0 or self.jobs < 1:
            raise ValueError("samples must be >= 0 and jobs >= 1")
        if not self.classes:
            raise ValueError("at least one relation class is required")

    def as_dict(self):
        return {
            "n_min": self.n_min, "n_max": self.n_max, "samples": self.samples, "seed": self.seed,
            "classes": list(self.classes), "theorems": list(self.theorems),
        }

    @classmethod
    def from_dict(cls, d: dict):
        d = dict(d)
        if "n_range" in d:
            d["n_min"], d["n_max"] = d.pop("n_range")
        return cls(**d)


@dataclass
class CampaignResult:
    config: dict
    cases: int = 0
    counts: dict[str, dict[str, int]] = field(default_factory=dict)
    failures: list[dict] = field(default_factory=list)
    conjecture: dict[str, int] = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def merge(self, other: "CampaignResult") -> "CampaignResult":
        out = CampaignResult(self.config, self.cases + other.cases)
        for src in (self.counts, other.counts):
            for t, c in src.items():
                dst = out.counts.setdefault(t, {})
                for k, v in c.items():
                    dst[k] = dst.get(k, 0) + v
        for src in (self.conjecture, other.conjecture):
            for k, v in src.items():
                out.conjecture[k] = out.conjecture.get(k, 0) + v
        out.failures = sorted(self.failures + other.failures, key=_failure_key)
        out.elapsed = self.elapsed + other.elapsed
        return out

    def as_dict(self, *, timing: bool = True) -> dict:
        d = {
            "config": self.config,
            "cases": self.cases,
            "ok": self.ok,
            "counts": {t: dict(sorted(c.items())) for t, c in sorted(self.counts.items(), key=lambda kv: int(kv[0][1:]))},
            "failures": self.failures,
            "quasiorder_st1_conjecture": dict(sorted(self.conjecture.items())),
            "note": "a failure indicates a defect in this implementation, not in the theorem",
        }
        if timing:
            d["elapsed_seconds"] = round(self.elapsed, 3)
        return d

    def to_json(self, **kw) -> str:
        return json.dumps(self.as_dict(**kw), indent=2, ensure_ascii=False)

    def digest(self) -> str:
        """Hash of the result without timing; equal for equal (seed, config)."""
        return hashlib.sha256(self.to_json(timing=False).encode()).hexdigest()


def _failure_key(f):
    return (f["theorem"], f["n"], f["source"], f["index"])


def _work_items(cfg: CampaignConfig):
    """(n, source, index) triples; exhaustive sizes list every relation."""
    items = []
    for n in range(cfg.n_min, cfg.n_max + 1):
        if n <= EXHAUSTIVE_MAX_N:
            count = 1 << (n * (n - 1))
            items.extend((n, "exhaustive", i) for i in range(count))
        else:
            items.extend((n, "sampled", i) for i in range(cfg.samples))
    return items


def _relation_for(cfg: CampaignConfig, n: int, source: str, index: int):
    if source == "exhaustive":
        off = [(x, y) for x in range(n) for y in range(n) if x != y]
        succ = [1 << x for x in range(n)]
        for k, (x, y) in enumerate(off):
            if index >> k & 1:
                succ[x] |= 1 << y
        return BinaryRelation(n, tuple(succ)), "exhaustive", None
    s = instance_seed(cfg.seed, n, index)
    cls = cfg.classes[index % len(cfg.classes)]
    return sample_relation(cls, n, s), cls, s


def _run_block(cfg: CampaignConfig, items) -> CampaignResult:
    res = CampaignResult(cfg.as_dict())
    start = time.perf_counter()
    for n, source, index in items:
        R, cls, s = _relation_for(cfg, n, source, index)
        inst = Instance(R)
        res.cases += 1
        for tid in cfg.theorems:
            c = res.counts.setdefault(tid, {"evaluated": 0, "passed": 0, "failed": 0, "out_of_scope": 0})
            issues = _evaluate_case(THEOREMS[tid], inst)
            if issues is None:
                c["out_of_scope"] += 1
                continue
            c["evaluated"] += 1
            if not issues:
                c["passed"] += 1
                continue
            c["failed"] += 1
            res.failures.append({
                "theorem": tid, "n": n, "source": source, "index": index, "class": cls, "seed": s,
                "relation": R.neighborhoods(), "issues": issues[:5],
            })
        if inst.relation_flags.quasiorder and "T9" in cfg.theorems:
            q = cond.st1_composition_conjecture(R)
            res.conjecture["quasiorders"] = res.conjecture.get("quasiorders", 0) + 1
            for k in ("agrees_common_predecessor", "agrees_common_successor"):
                res.conjecture[k] = res.conjecture.get(k, 0) + int(q[k])
    res.elapsed = time.perf_counter() - start
    return res


def _run_block_args(args):
    return _run_block(*args)


def run_campaign(config: CampaignConfig | dict | None = None, **overrides) -> CampaignResult:
    """Run a deterministic campaign; ``jobs > 1`` splits work into contiguous blocks."""
    if config is None:
        cfg = CampaignConfig(**overrides)
    elif isinstance(config, dict):
        cfg = CampaignConfig.from_dict({**config, **overrides})
    else:
        cfg = config
    items = _work_items(cfg)
    start = time.perf_counter()
    if cfg.jobs == 1 or len(items) < 2:
        result = _run_block(cfg, items)
    else:
        size = -(-len(items) // cfg.jobs)
        blocks = [items[k:k + size] for k in range(0, len(items), size)]
        result = CampaignResult(cfg.as_dict())
        with ProcessPoolExecutor(cfg.jobs) as pool:
            for part in pool.map(_run_block_args, [(cfg, b) for b in blocks]):
                result = result.merge(part)
    result.failures = sorted(result.failures, key=_failure_key)
    if cfg.minimize:
        seen: dict[str, int] = {}
        for f in result.failures:
            if seen.get(f["theorem"], 0) >= 3:
                continue
            seen[f["theorem"]] = seen.get(f["theorem"], 0) + 1
            R = BinaryRelation.from_neighborhoods(f["relation"])
            f["minimized"] = minimize_witness(R, f["theorem"]).neighborhoods()
    result.failures = result.failures[: cfg.max_failures]
    result.elapsed = time.perf_counter() - start
    return result


# -- witness minimization ------------------------------------------------------------------


def _restrict(R: BinaryRelation, drop: int) -> BinaryRelation:
    keep = [x for x in range(R.n) if x != drop]
    pos = {x: i for i, x in enumerate(keep)}
    succ = []
    for x in keep:
        m = 0
        for y in keep:
            if R.succ[x] >> y & 1:
                m |= 1 << pos[y]
        succ.append(m)
    return BinaryRelation(len(keep), tuple(succ))


def minimize_witness(relation: BinaryRelation, theorem: str | TheoremCase,
                     checker: Callable[[BinaryRelation], bool] | None = None) -> BinaryRelation:
    """Greedily delete elements and off-diagonal pairs while the failure persists.

    ``checker(R)`` returns True when ``R`` still fails; by default a relation
    fails when the theorem is in scope and reports problems.
    """
    if checker is None:
        def checker(R):
            issues = evaluate(R, theorem)
            return bool(issues)

    if not checker(relation):
        raise ValueError("the relation does not fail the theorem, nothing to minimize")
    R = relation
    changed = True
    while changed:
        changed = False
        for x in range(R.n):
            if R.n == 1:
                break
            cand = _restrict(R, x)
            if checker(cand):
                R, changed = cand, True
                break
        if changed:
            continue
        for x, y in R.pairs():
            if x == y:
                continue
            succ = list(R.succ)
            succ[x] &= ~(1 << y)
            cand = BinaryRelation(R.n, tuple(succ))
            if checker(cand):
                R, changed = cand, True
                break
    return R
