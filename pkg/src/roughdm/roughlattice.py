"""Rough sets of a reflexive relation and their Dedekind-MacNeille completion.

The completion is built directly from its characterisation as the pairs
``(A, B)`` with ``A`` a lower approximation, ``B`` an upper approximation,
``A△▲ <= B`` and ``A & S == B & S`` where ``S`` is the set of singletons.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple

import numpy as np

from .approx import Approximations
from .families import (
    HypothesisError,
    brute_pseudocomplement,
    build_family,
    family_irreducibles,
    upper_pseudocomplement,
)
from .latticecore import FiniteLattice, ResourceCapError
from .relation import BinaryRelation, RelationError, Subset, core, format_subset, full_mask, is_subset, singletons

DEFAULT_RS_CAP = 20
DEFAULT_PAIR_CAP = 1 << 22


class RoughPair(NamedTuple):
    lower: Subset
    upper: Subset

    def format(self, labels=None, n=None) -> str:
        return f"({format_subset(self.lower, labels, n)}, {format_subset(self.upper, labels, n)})"


def enumerate_rs(R: BinaryRelation, cap: int = DEFAULT_RS_CAP) -> list[RoughPair]:
    """All rough sets ``(X▼, X▲)``, deduplicated, over every subset ``X``."""
    if R.n > cap:
        raise ResourceCapError(f"enumerating rough sets needs 2^{R.n} subsets; cap is n <= {cap}")
    ap = Approximations(R)
    seen = {}
    for X in range(1 << R.n):
        seen.setdefault(RoughPair(ap.lower(X), ap.upper(X)), None)
    return sorted(seen, key=_pair_key)


def _pair_key(p: RoughPair):
    return (p.lower.bit_count() + p.upper.bit_count(), p.lower, p.upper)


def _bit_matrix(masks, n):
    return np.array([[X >> i & 1 for i in range(n)] for X in masks], dtype=np.int32).reshape(len(masks), n)


@dataclass
class GMapResult:
    """The involution on join-irreducibles and the partition it induces."""

    g: dict[int, int]
    jminus: list[int]
    jzero: list[int]
    jplus: list[int]
    issues: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.issues


class RoughSetSystem:
    """RS and DM(RS) for one reflexive relation, with cached families."""

    def __init__(self, R: BinaryRelation, *, pair_cap: int = DEFAULT_PAIR_CAP, rs_cap: int = DEFAULT_RS_CAP):
        if not R.is_reflexive():
            raise RelationError("rough-set completions are only built for reflexive relations")
        self.relation = R
        self.n = R.n
        self.top = full_mask(R.n)
        self.ap = Approximations(R)
        self.singletons = singletons(R)
        self.upper = build_family(R, "upper")
        self.lower = build_family(R, "lower")
        self.upper_inv = build_family(R, "upper_inv")
        self.lower_inv = build_family(R, "lower_inv")
        if len(self.upper) * len(self.lower) > pair_cap:
            raise ResourceCapError(
                f"{len(self.lower)} x {len(self.upper)} candidate pairs exceed the cap of {pair_cap}"
            )
        self._rs_cap = rs_cap
        ap, S = self.ap, self.singletons
        pairs = []
        for A in self.lower:
            closure = ap.upper(ap.upper_inv(A))
            for B in self.upper:
                if is_subset(closure, B) and A & S == B & S:
                    pairs.append(RoughPair(A, B))
        self.pairs = sorted(pairs, key=_pair_key)
        self._pos = {p: i for i, p in enumerate(self.pairs)}

    # -- membership and lattice tables ---------------------------------------------

    def __len__(self):
        return len(self.pairs)

    def __contains__(self, p) -> bool:
        return tuple(p) in self._pos

    def index(self, p) -> int:
        try:
            return self._pos[RoughPair(*p)]
        except KeyError:
            raise ValueError(f"{p} is not an element of the completion") from None

    @cached_property
    def rs(self) -> list[RoughPair]:
        return enumerate_rs(self.relation, self._rs_cap)

    @cached_property
    def rs_indices(self) -> list[int]:
        return [self.index(p) for p in self.rs]

    @property
    def rs_equals_dmrs(self) -> bool:
        return len(self.rs) == len(self.pairs)

    def meet(self, *items) -> RoughPair:
        A, B = self.top, self.top
        for a, b in items:
            A &= a
            B &= b
        return RoughPair(A, self.ap.upper(self.ap.lower_inv(B)))

    def join(self, *items) -> RoughPair:
        A, B = 0, 0
        for a, b in items:
            A |= a
            B |= b
        return RoughPair(self.ap.lower(self.ap.upper_inv(A)), B)

    def kleene_not(self, p) -> RoughPair:
        A, B = p
        return RoughPair(self.top & ~B, self.top & ~A)

    @cached_property
    def lattice(self) -> FiniteLattice:
        pairs, n = self.pairs, self.n
        m = len(pairs)
        la = _bit_matrix([p.lower for p in pairs], n)
        ub = _bit_matrix([p.upper for p in pairs], n)
        leq = ((la @ (1 - la).T) == 0) & ((ub @ (1 - ub).T) == 0)
        ap, pos = self.ap, self._pos
        interior: dict[int, int] = {}
        closure: dict[int, int] = {}
        meet = np.empty((m, m), dtype=np.int64)
        join = np.empty((m, m), dtype=np.int64)
        for i, (a1, b1) in enumerate(pairs):
            for j in range(i, m):
                a2, b2 = pairs[j]
                bb = b1 & b2
                if bb not in interior:
                    interior[bb] = ap.upper(ap.lower_inv(bb))
                aa = a1 | a2
                if aa not in closure:
                    closure[aa] = ap.lower(ap.upper_inv(aa))
                meet[i, j] = meet[j, i] = pos[(a1 & a2, interior[bb])]
                join[i, j] = join[j, i] = pos[(closure[aa], b1 | b2)]
        neg = self.negation_table()
        return FiniteLattice(pairs, leq, meet, join, neg)

    def negation_table(self):
        """Index table of ``(A, B) -> (Bᶜ, Aᶜ)``, or None if it leaves the completion."""
        out = []
        for p in self.pairs:
            q = self.kleene_not(p)
            if q not in self._pos:
                return None
            out.append(self._pos[q])
        return out

    @property
    def is_distributive(self) -> bool:
        return self.lattice.is_distributive

    # -- pseudocomplements ------------------------------------------------------------

    def _require_distributive(self):
        if not self.is_distributive:
            raise HypothesisError("DM(RS) is not distributive; closed-form pseudocomplements are not available")

    def upper_star(self, B: Subset) -> Subset:
        return upper_pseudocomplement(self.relation, B, self.upper)

    def pseudo(self, p) -> RoughPair:
        """``(A, B)* = (B*▽▼, B*)`` with ``B*`` from the core formula."""
        self._require_distributive()
        self.index(p)
        Bs = self.upper_star(p[1])
        return RoughPair(self.ap.lower(self.ap.lower_inv(Bs)), Bs)

    def dual_pseudo(self, p) -> RoughPair:
        """``(A, B)+ = ~((~(A, B))*)``, checked against ``(A+, A+△▲)``."""
        self._require_distributive()
        self.index(p)
        via_negation = self.kleene_not(self.pseudo(self.kleene_not(p)))
        A_plus = self.top & ~self.upper_star(self.top & ~p[0])
        closed = RoughPair(A_plus, self.ap.upper(self.ap.upper_inv(A_plus)))
        if closed != via_negation:
            raise AssertionError(f"dual pseudocomplement forms disagree at {p}: {via_negation} vs {closed}")
        return via_negation

    def oracle_pseudo(self, p):
        """Greatest element meeting ``p`` at the bottom, by scanning; None if absent."""
        i = self.lattice.pseudocomplements[self.index(p)]
        return None if i < 0 else self.pairs[i]

    def oracle_dual_pseudo(self, p):
        i = self.lattice.dual_pseudocomplements[self.index(p)]
        return None if i < 0 else self.pairs[i]

    def oracle_upper_star(self, B: Subset):
        return brute_pseudocomplement(self.upper, B)

    def op(self, name: str, x, y=None) -> RoughPair:
        if name == "meet":
            return self.meet(x, y)
        if name == "join":
            return self.join(x, y)
        if name == "kleene_not":
            return self.kleene_not(x)
        if name == "pseudo":
            return self.pseudo(x)
        if name == "dual_pseudo":
            return self.dual_pseudo(x)
        raise ValueError(f"unknown operation {name!r}")

    # -- irreducibles -------------------------------------------------------------------

    @cached_property
    def upper_irreducibles(self):
        return family_irreducibles(self.upper)

    @cached_property
    def upper_inv_irreducibles(self):
        return family_irreducibles(self.upper_inv)

    def point_pair(self, x: int) -> RoughPair:
        X = 1 << x
        return RoughPair(self.ap.lower(X), self.ap.upper(X))

    def point_inv_pair(self, x: int) -> RoughPair:
        Rx = self.relation.succ[x]
        return RoughPair(self.ap.lower(Rx), self.ap.upper(Rx))

    def irreducibles_formula(self) -> dict[str, list[RoughPair]]:
        """Join-irreducibles and atoms of the completion from the relation alone."""
        J_up = set(self.upper_irreducibles.join_irreducibles)
        J_ui = set(self.upper_inv_irreducibles.join_irreducibles)
        atoms_up = set(self.upper_irreducibles.atoms)
        inv = self.ap.Rinv.succ
        J = set()
        for x in range(self.n):
            if self.relation.succ[x] in J_ui:
                J.add(self.point_inv_pair(x))
            if inv[x] in J_up and not self.singletons >> x & 1:
                J.add(self.point_pair(x))
        atoms = {self.point_pair(x) for x in range(self.n) if inv[x] in atoms_up}
        return {"join_irreducibles": sorted(J, key=_pair_key), "atoms": sorted(atoms, key=_pair_key)}

    def irreducibles_lattice(self) -> dict[str, list[RoughPair]]:
        L = self.lattice
        return {
            "join_irreducibles": sorted((self.pairs[i] for i in L.join_irreducibles), key=_pair_key),
            "atoms": sorted((self.pairs[i] for i in L.atoms), key=_pair_key),
        }

    def exists_pair_failures(self) -> list:
        """Pairs ``(A, A△▲)`` and ``(B▽▼, B)`` that should lie in the completion but do not."""
        ap, bad = self.ap, []
        for A in self.lower:
            p = RoughPair(A, ap.upper(ap.upper_inv(A)))
            if p not in self._pos:
                bad.append(p)
        for B in self.upper:
            p = RoughPair(ap.lower(ap.lower_inv(B)), B)
            if p not in self._pos:
                bad.append(p)
        return bad

    # -- the g map ------------------------------------------------------------------------

    def g_map_and_partition(self) -> GMapResult:
        """``g(j)`` = least element not below ``~j``; split J by comparing ``j`` and ``g(j)``.

        The result is compared with the closed forms for the three parts; any
        disagreement is recorded in ``issues``.
        """
        self._require_distributive()
        L = self.lattice
        if L.negation is None:
            raise HypothesisError("the rough-set negation does not map DM(RS) into itself")
        neg, leq = L.negation, L.leq
        J = L.join_irreducibles
        Jset = set(J)
        g: dict[int, int] = {}
        issues: list[str] = []
        for j in J:
            outside = np.flatnonzero(~leq[:, neg[j]]).tolist()
            gj = L.meet_of(outside)
            if leq[gj, neg[j]]:
                issues.append(f"meet of elements not below ~j lies below ~j for j={self.pairs[j]}")
            if gj not in Jset:
                issues.append(f"g({self.pairs[j]}) = {self.pairs[gj]} is not join-irreducible")
            g[j] = gj
        jminus = [j for j in J if g[j] != j and leq[j, g[j]]]
        jzero = [j for j in J if g[j] == j]
        jplus = [j for j in J if g[j] != j and leq[g[j], j]]
        for j in J:
            if g.get(g[j]) != j:
                issues.append(f"J2: g(g(j)) != j at {self.pairs[j]}")
            if not (leq[j, g[j]] or leq[g[j], j]):
                issues.append(f"J3: j and g(j) incomparable at {self.pairs[j]}")
            for k in J:
                if leq[j, k] and not leq[g[k], g[j]]:
                    issues.append(f"J1: g not antitone on {self.pairs[j]} <= {self.pairs[k]}")
        # fixed points are isolated in J only for regular algebras; a 4-chain shows this
        regular = len({(int(L.pseudocomplements[x]), int(L.dual_pseudocomplements[x])) for x in range(len(L))}) == len(L)
        for j in (jzero if regular else []):
            for k in J:
                if k != j and (leq[j, k] or leq[k, j]):
                    issues.append(f"fixed point {self.pairs[j]} comparable with {self.pairs[k]}")
        if set(jminus) != {j for j in J if leq[j, neg[j]]}:
            issues.append("J- differs from {j | j <= ~j}")

        # closed forms
        S, inv = self.singletons, self.ap.Rinv
        J_up = set(self.upper_irreducibles.join_irreducibles)
        J_ui = set(self.upper_inv_irreducibles.join_irreducibles)
        exp_minus = {RoughPair(0, inv.succ[x]) for x in range(self.n)
                     if inv.succ[x] in J_up and not S >> x & 1}
        exp_zero = {RoughPair(1 << x, inv.succ[x]) for x in range(self.n) if S >> x & 1}
        exp_plus = {self.point_inv_pair(x) for x in range(self.n)
                    if self.relation.succ[x] in J_ui and not S >> x & 1}
        for name, got, exp in (("J-", jminus, exp_minus), ("J0", jzero, exp_zero), ("J+", jplus, exp_plus)):
            if {self.pairs[i] for i in got} != exp:
                issues.append(f"{name} differs from its closed form")
        for x in range(self.n):
            j = RoughPair(0, inv.succ[x])
            if j not in exp_minus:
                continue
            gj = self.pairs[g[self._pos[j]]]
            for z in _bits(core(inv, x)):
                if S >> z & 1:
                    issues.append(f"core element {z} of R̆({x}) is a singleton")
                if self.relation.succ[z] not in J_ui:
                    issues.append(f"R({z}) is not join-irreducible in the upper_inv family")
                if self.point_inv_pair(z) != gj:
                    issues.append(f"g({j}) differs from the pair generated by core element {z}")
        return GMapResult(g, jminus, jzero, jplus, issues)


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def build_dmrs(R: BinaryRelation, **caps) -> RoughSetSystem:
    return RoughSetSystem(R, **caps)


def dmrs_ops(S: RoughSetSystem, x, y=None, op: str = "meet") -> RoughPair:
    return S.op(op, x, y)


def dmrs_irreducibles(S: RoughSetSystem) -> dict[str, list[RoughPair]]:
    return S.irreducibles_formula()


def g_map_and_partition(S: RoughSetSystem) -> GMapResult:
    return S.g_map_and_partition()
