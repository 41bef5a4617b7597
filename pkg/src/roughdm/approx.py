"""Lower and upper approximations and the laws they obey.

Four operators are provided for a relation ``R``:

=============  =====================================  =========
name           definition                             notation
=============  =====================================  =========
``lower``      ``{x | R(x) <= X}``                    X▼
``upper``      ``{x | R(x) & X != 0}``                X▲
``lower_inv``  same as ``lower`` for the inverse      X▽
``upper_inv``  same as ``upper`` for the inverse      X△
=============  =====================================  =========
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .relation import BinaryRelation, Subset, full_mask, inverse, is_subset

MODES = ("lower", "upper", "lower_inv", "upper_inv")


def lower(R: BinaryRelation, X: Subset) -> Subset:
    out = 0
    for x, s in enumerate(R.succ):
        if s & ~X == 0:
            out |= 1 << x
    return out


def upper(R: BinaryRelation, X: Subset) -> Subset:
    out = 0
    for x, s in enumerate(R.succ):
        if s & X:
            out |= 1 << x
    return out


def lower_inv(R: BinaryRelation, X: Subset) -> Subset:
    return lower(inverse(R), X)


def upper_inv(R: BinaryRelation, X: Subset) -> Subset:
    # X△ is the union of R(x) over x in X
    out = 0
    for x, s in enumerate(R.succ):
        if X >> x & 1:
            out |= s
    return out


def approximate(R: BinaryRelation, X: Subset, mode: str) -> Subset:
    if X & ~R.universe:
        raise ValueError("subset leaves the universe")
    try:
        op = _OPS[mode]
    except KeyError:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}") from None
    return op(R, X)


_OPS = {"lower": lower, "upper": upper, "lower_inv": lower_inv, "upper_inv": upper_inv}


class Approximations:
    """The four operators bound to one relation, with the inverse precomputed."""

    __slots__ = ("R", "Rinv", "n", "top")

    def __init__(self, R: BinaryRelation):
        self.R = R
        self.Rinv = inverse(R)
        self.n = R.n
        self.top = full_mask(R.n)

    def lower(self, X):
        return lower(self.R, X)

    def upper(self, X):
        # X▲ is the union of R̆(x) over x in X
        out = 0
        for x, s in enumerate(self.Rinv.succ):
            if X >> x & 1:
                out |= s
        return out

    def lower_inv(self, X):
        return lower(self.Rinv, X)

    def upper_inv(self, X):
        return upper_inv(self.R, X)

    def __call__(self, X, mode):
        return getattr(self, mode)(X)


# -- law suite ----------------------------------------------------------------


@dataclass
class LawReport:
    """Outcome of evaluating the approximation laws on a sample of subsets."""

    relation: BinaryRelation
    sample_size: int
    exhaustive: bool
    checks: dict[str, int] = field(default_factory=dict)
    violations: dict[str, list] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not any(self.violations.values())

    def record(self, law: str, passed: bool, witness=None):
        self.checks[law] = self.checks.get(law, 0) + 1
        self.violations.setdefault(law, [])
        if not passed and len(self.violations[law]) < 5:
            self.violations[law].append(witness)

    def as_dict(self):
        return {
            "sample_size": self.sample_size,
            "provenance": "exhaustive" if self.exhaustive else "sampled",
            "checks": dict(self.checks),
            "violations": {k: v for k, v in self.violations.items() if v},
            "ok": self.ok,
        }


def law_sample(R: BinaryRelation, seed: int = 0, exhaustive_limit: int = 12, size: int = 512) -> tuple[list[Subset], bool]:
    """All subsets for small universes, otherwise a seeded sample plus structured cases."""
    n = R.n
    if n <= exhaustive_limit:
        return list(range(1 << n)), True
    rng = random.Random(seed)
    top = full_mask(n)
    inv = inverse(R)
    sample = {0, top}
    sample.update(1 << x for x in range(n))
    sample.update(R.succ)
    sample.update(inv.succ)
    while len(sample) < size + 2 + 3 * n:
        sample.add(rng.getrandbits(n))
    return sorted(sample), False


def law_suite(R: BinaryRelation, sample=None, *, seed: int = 0, pair_limit: int = 4096) -> LawReport:
    """Check GC1-GC7, Ref1-Ref2 and the complement duality on ``sample``.

    Pairwise laws (monotonicity, Galois adjunction, binary distribution) run
    over all pairs when the sample is small and over ``pair_limit`` seeded
    pairs otherwise.
    """
    if sample is None:
        sample, exhaustive = law_sample(R, seed)
    else:
        base = {0, R.universe, *(1 << x for x in range(R.n))}
        sample = sorted(set(sample) | base)
        exhaustive = len(sample) == 1 << R.n
    ap = Approximations(R)
    top = ap.top
    rep = LawReport(R, len(sample), exhaustive)
    lo, up, loi, upi = ap.lower, ap.upper, ap.lower_inv, ap.upper_inv
    table = {X: (lo(X), up(X), loi(X), upi(X)) for X in sample}

    rep.record("GC1", up(0) == 0 and upi(0) == 0 and lo(top) == top and loi(top) == top, "bounds")
    if R.is_reflexive():
        rep.record("Ref1", lo(0) == 0 and loi(0) == 0 and up(top) == top and upi(top) == top, "bounds")

    for X, (l, u, li, ui) in table.items():
        rep.record("GC2", is_subset(up(li), X) and is_subset(X, loi(u))
                   and is_subset(upi(l), X) and is_subset(X, lo(ui)), X)
        rep.record("GC6", up(loi(u)) == u and upi(lo(ui)) == ui
                   and lo(upi(l)) == l and loi(up(li)) == li, X)
        Xc = top & ~X
        rep.record("dual", up(Xc) == top & ~l and lo(Xc) == top & ~u
                   and upi(Xc) == top & ~li and loi(Xc) == top & ~ui, X)
        if R.is_reflexive():
            rep.record("Ref2", is_subset(l, X) and is_subset(X, u) and is_subset(li, X) and is_subset(X, ui), X)

    if len(sample) ** 2 <= pair_limit:
        pairs = itertools.product(sample, repeat=2)
    else:
        rng = random.Random(seed)
        pairs = ((rng.choice(sample), rng.choice(sample)) for _ in range(pair_limit))
    for X, Y in pairs:
        tx, ty = table[X], table[Y]
        if is_subset(X, Y):
            rep.record("GC3", all(is_subset(a, b) for a, b in zip(tx, ty)), (X, Y))
        rep.record("GC4", up(X | Y) == tx[1] | ty[1] and upi(X | Y) == tx[3] | ty[3], (X, Y))
        rep.record("GC5", lo(X & Y) == tx[0] & ty[0] and loi(X & Y) == tx[2] & ty[2], (X, Y))
        rep.record("galois", (is_subset(tx[1], Y) == is_subset(X, ty[2]))
                   and (is_subset(tx[3], Y) == is_subset(X, ty[0])), (X, Y))

    # GC4/GC5 for whole families: unions of all singletons recover the set
    for X in sample:
        parts = [1 << x for x in range(R.n) if X >> x & 1]
        acc_u = acc_ui = 0
        for p in parts:
            acc_u |= up(p)
            acc_ui |= upi(p)
        rep.record("GC4", acc_u == table[X][1] and acc_ui == table[X][3], ("singletons", X))
        coparts = [top & ~(1 << x) for x in range(R.n) if not X >> x & 1]
        acc_l, acc_li = top, top
        for p in coparts:
            acc_l &= lo(p)
            acc_li &= loi(p)
        rep.record("GC5", acc_l == table[X][0] and acc_li == table[X][2], ("cosingletons", X))

    # GC7: u -> u▽ and l -> l△ are order isomorphisms between the image families
    ups = {t[1] for t in table.values()}
    lis = {t[2] for t in table.values()}
    los = {t[0] for t in table.values()}
    uis = {t[3] for t in table.values()}
    rep.record("GC7", all(up(loi(B)) == B for B in ups) and all(loi(up(C)) == C for C in lis)
               and all(upi(lo(B)) == B for B in uis) and all(lo(upi(C)) == C for C in los), "images")
    return rep


def quasiorder_identities(R: BinaryRelation, X: Subset) -> dict[str, bool]:
    """Identities that hold for every subset when ``R`` is a quasiorder."""
    ap = Approximations(R)
    u, ui, l, li = ap.upper(X), ap.upper_inv(X), ap.lower(X), ap.lower_inv(X)
    return {
        "upper_idempotent": ap.upper(u) == u,
        "upper_lower_inv": ap.lower_inv(u) == u,
        "upper_inv_lower": ap.lower(ui) == ui,
        "lower_upper_inv": ap.upper_inv(l) == l,
        "lower_inv_upper": ap.upper(li) == li,
    }
