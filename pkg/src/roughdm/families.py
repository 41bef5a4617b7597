"""The four families of approximations as explicit complete lattices of sets.

``upper``      all X▲, the unions of inverse neighbourhoods R̆(x) = {x}▲
``upper_inv``  all X△, the unions of neighbourhoods R(x) = {x}△
``lower``      all X▼, complements of the ``upper`` family
``lower_inv``  all X▽, complements of the ``upper_inv`` family

Members are bit masks sorted by ``(popcount, value)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .approx import Approximations
from .latticecore import FiniteLattice, ResourceCapError
from .relation import BinaryRelation, Subset, core, full_mask, inverse, is_subset

KINDS = ("upper", "lower", "upper_inv", "lower_inv")
DEFAULT_FAMILY_CAP = 1 << 20


class HypothesisError(ValueError):
    """A closed-form result was requested outside the hypotheses it is proved under."""


def _sort_key(mask):
    return (mask.bit_count(), mask)


def union_closure(generators, cap=DEFAULT_FAMILY_CAP) -> list[Subset]:
    closed = {0}
    for g in dict.fromkeys(generators):
        closed |= {c | g for c in closed}
        if len(closed) > cap:
            raise ResourceCapError(f"family exceeds the cap of {cap} members")
    return sorted(closed, key=_sort_key)


@dataclass(frozen=True)
class SetFamily:
    n: int
    members: tuple[Subset, ...]
    kind: str
    relation: BinaryRelation

    def __contains__(self, X) -> bool:
        return X in self._positions

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    @cached_property
    def _positions(self):
        return {X: i for i, X in enumerate(self.members)}

    def position(self, X: Subset) -> int:
        try:
            return self._positions[X]
        except KeyError:
            raise ValueError(f"{X:#b} is not a member of the {self.kind} family") from None

    @property
    def is_upper(self) -> bool:
        return self.kind.startswith("upper")

    @property
    def top(self) -> Subset:
        return self.members[-1]

    @property
    def bottom(self) -> Subset:
        return self.members[0]

    @cached_property
    def approximations(self) -> Approximations:
        return Approximations(self.relation)

    def _interior(self, X: Subset) -> Subset:
        """Largest member contained in ``X`` (upper kinds)."""
        ap = self.approximations
        if self.kind == "upper":
            return ap.upper(ap.lower_inv(X))
        return ap.upper_inv(ap.lower(X))

    def _closure(self, X: Subset) -> Subset:
        """Smallest member containing ``X`` (lower kinds)."""
        ap = self.approximations
        if self.kind == "lower":
            return ap.lower(ap.upper_inv(X))
        return ap.lower_inv(ap.upper(X))

    def meet(self, items) -> Subset:
        items = list(items)
        for X in items:
            self.position(X)
        acc = full_mask(self.n)
        for X in items:
            acc &= X
        if not items:
            return self.top
        return self._interior(acc) if self.is_upper else acc

    def join(self, items) -> Subset:
        items = list(items)
        for X in items:
            self.position(X)
        acc = 0
        for X in items:
            acc |= X
        if not items:
            return self.bottom
        return acc if self.is_upper else self._closure(acc)

    @cached_property
    def lattice(self) -> FiniteLattice:
        members = self.members
        m = len(members)
        bits = np.array([[X >> i & 1 for i in range(self.n)] for X in members], dtype=np.int32).reshape(m, self.n)
        leq = (bits @ (1 - bits).T) == 0
        pos = self._positions
        meet = np.empty((m, m), dtype=np.int64)
        join = np.empty((m, m), dtype=np.int64)
        for i, X in enumerate(members):
            for j in range(i, m):
                Y = members[j]
                a = pos[self._interior(X & Y)] if self.is_upper else pos[X & Y]
                b = pos[X | Y] if self.is_upper else pos[self._closure(X | Y)]
                meet[i, j] = meet[j, i] = a
                join[i, j] = join[j, i] = b
        return FiniteLattice(list(members), leq, meet, join)


def build_family(R: BinaryRelation, kind: str, cap: int = DEFAULT_FAMILY_CAP) -> SetFamily:
    if kind not in KINDS:
        raise ValueError(f"unknown family kind {kind!r}")
    top = full_mask(R.n)
    if kind in ("upper", "lower"):
        gens = inverse(R).succ
    else:
        gens = R.succ
    ups = union_closure(gens, cap)
    if kind.startswith("upper"):
        members = ups
    else:
        members = sorted((top & ~X for X in ups), key=_sort_key)
    return SetFamily(R.n, tuple(members), kind, R)


def family_meet(F: SetFamily, S) -> Subset:
    return F.meet(S)


def family_join(F: SetFamily, S) -> Subset:
    return F.join(S)


@dataclass
class FamilyIrreducibles:
    join_irreducibles: list[Subset]
    atoms: list[Subset]
    is_atomistic: bool
    is_boolean: bool
    is_boolean_by_atoms: bool
    is_distributive: bool


def family_irreducibles(F: SetFamily) -> FamilyIrreducibles:
    """Join-irreducibles and atoms of a family.

    Upper families use inclusion order: a member is join-irreducible when it
    differs from the union of the members strictly inside it.  Lower families
    are reported in reversed order (meet-irreducibles and coatoms), which the
    complement map carries onto the irreducibles of the matching upper family.
    """
    members = F.members
    if F.is_upper:
        irr = []
        for X in members:
            if X == 0:
                continue
            inside = 0
            for Y in members:
                if Y != X and is_subset(Y, X):
                    inside |= Y
            if inside != X:
                irr.append(X)
        atoms = [X for X in members if X and all(Y == 0 or Y == X or not is_subset(Y, X) for Y in members)]
    else:
        top = full_mask(F.n)
        irr = []
        for X in members:
            if X == top:
                continue
            outside = top
            for Y in members:
                if Y != X and is_subset(X, Y):
                    outside &= Y
            if outside != X:
                irr.append(X)
        atoms = [X for X in members if X != top and all(Y == top or Y == X or not is_subset(X, Y) for Y in members)]
    L = F.lattice
    comp = bool(L.complemented.all())
    distributive = L.is_distributive
    atomistic = set(irr) <= set(atoms)
    return FamilyIrreducibles(
        join_irreducibles=irr,
        atoms=atoms,
        is_atomistic=atomistic,
        is_boolean=distributive and comp,
        is_boolean_by_atoms=distributive and set(irr) == set(atoms),
        is_distributive=distributive,
    )


# -- pseudocomplements in the upper family -----------------------------------------


def kernel_K(R: BinaryRelation, B: Subset, family: SetFamily | None = None) -> Subset:
    """Union of the inverse cores of all ``x`` with ``R̆(x) <= B``."""
    F = family or build_family(R, "upper")
    F.position(B)
    inv = inverse(R)
    out = 0
    for x, nb in enumerate(inv.succ):
        if is_subset(nb, B):
            out |= core(inv, x)
    return out


def brute_pseudocomplement(F: SetFamily, B: Subset):
    """Greatest member whose family meet with ``B`` is the bottom, or None."""
    F.position(B)
    disjoint = [Y for Y in F.members if F.meet([Y, B]) == F.bottom]
    if F.is_upper:
        cand = 0
        for Y in disjoint:
            cand |= Y
    else:
        cand = F.join(disjoint)
    return cand if cand in disjoint else None


def brute_dual_pseudocomplement(F: SetFamily, A: Subset):
    """Least member whose family join with ``A`` is the top, or None."""
    F.position(A)
    covering = [Y for Y in F.members if F.join([Y, A]) == F.top]
    cand = F.meet(covering)
    return cand if cand in covering else None


def _require_distributive(F: SetFamily):
    if not F.lattice.is_distributive:
        raise HypothesisError(
            f"the {F.kind} family is not distributive, so the core formula for pseudocomplements does not apply"
        )


def upper_pseudocomplement(R: BinaryRelation, B: Subset, family: SetFamily | None = None) -> Subset:
    """Pseudocomplement of ``B`` in the upper family, from the inverse-core kernel.

    Computed both as ``K(B)△ᶜ▲`` and as the largest member inside ``K(B)ᶜ``;
    the two must agree.  Refuses unless the family is distributive.
    """
    F = family or build_family(R, "upper")
    _require_distributive(F)
    K = kernel_K(R, B, F)
    ap = F.approximations
    top = full_mask(R.n)
    via_formula = ap.upper(top & ~ap.upper_inv(K))
    interior = 0
    for X in F.members:
        if X & K == 0:
            interior |= X
    if via_formula != interior:
        raise AssertionError(f"pseudocomplement forms disagree for {B:#b}: {via_formula:#b} vs {interior:#b}")
    return via_formula


def lower_dual_pseudocomplement(R: BinaryRelation, A: Subset, upper: SetFamily | None = None) -> Subset:
    """Dual pseudocomplement in the lower family: ``A+ = A^{c*c}``."""
    top = full_mask(R.n)
    return top & ~upper_pseudocomplement(R, top & ~A, upper)
