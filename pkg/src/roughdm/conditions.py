"""Relation-level conditions that decide Stone and regular double Stone structure.

Every check returns a :class:`ConditionResult`.  A failing check carries the
lexicographically least failing tuple (0-based elements) as its witness.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any

from .approx import Approximations
from .families import SetFamily, build_family, family_irreducibles
from .relation import BinaryRelation, RelationError, core, full_mask, inverse, is_subset


@dataclass(frozen=True)
class ConditionResult:
    name: str
    holds: bool
    witness: dict[str, Any] | None = None
    provenance: str = field(default="exhaustive")

    def __bool__(self):
        return self.holds

    def as_dict(self):
        return {"name": self.name, "holds": self.holds, "witness": self.witness, "provenance": self.provenance}


def _require_reflexive(R: BinaryRelation):
    if not R.is_reflexive():
        raise RelationError("the conditions are stated for reflexive relations only")


def _upper_atoms(R: BinaryRelation, family: SetFamily | None = None) -> list[int]:
    F = family or build_family(R, "upper")
    return family_irreducibles(F).atoms


def _pair_condition(R: BinaryRelation, name: str, bounds: list[tuple[int, int]]) -> ConditionResult:
    """Common scan: any two ``{x}▲`` under a bound must share some ``{z}▲`` below both."""
    inv = inverse(R).succ
    for p, bound in bounds:
        below = [x for x in range(R.n) if is_subset(inv[x], bound)]
        for x, y in itertools.combinations_with_replacement(below, 2):
            common = inv[x] & inv[y]
            if not any(is_subset(inv[z], common) for z in range(R.n)):
                return ConditionResult(name, False, {"p": p, "x": x, "y": y, "bound": bound, "intersection": common})
    return ConditionResult(name, True)


def _st2_bounds(R: BinaryRelation) -> list[tuple[int, int]]:
    irr = set(family_irreducibles(build_family(R, "upper_inv")).join_irreducibles)
    ap = Approximations(R)
    return [(p, ap.upper(R.succ[p])) for p in range(R.n) if R.succ[p] in irr]


def check_st1(R: BinaryRelation) -> ConditionResult:
    """Below any ``{p}▲``, two sets ``{x}▲`` and ``{y}▲`` have a common ``{z}▲`` beneath them."""
    _require_reflexive(R)
    inv = inverse(R).succ
    return _pair_condition(R, "St1", [(p, inv[p]) for p in range(R.n)])


def check_st2(R: BinaryRelation) -> ConditionResult:
    """As St1, with bounds ``{p}△▲`` for ``{p}△`` join-irreducible in the upper_inv family."""
    _require_reflexive(R)
    return _pair_condition(R, "St2", _st2_bounds(R))


def _atom_condition(R: BinaryRelation, name: str, bounds) -> ConditionResult:
    atoms = _upper_atoms(R)
    for p, bound in bounds:
        inside = [a for a in atoms if is_subset(a, bound)]
        if len(inside) != 1:
            return ConditionResult(name, False, {"p": p, "bound": bound, "atoms": inside})
    return ConditionResult(name, True)


def check_st1_atom(R: BinaryRelation) -> ConditionResult:
    """Each ``{p}▲`` includes exactly one atom of the upper family."""
    _require_reflexive(R)
    inv = inverse(R).succ
    return _atom_condition(R, "St1°", [(p, inv[p]) for p in range(R.n)])


def check_st2_atom(R: BinaryRelation) -> ConditionResult:
    _require_reflexive(R)
    return _atom_condition(R, "St2°", _st2_bounds(R))


def check_rst(R: BinaryRelation) -> ConditionResult:
    """Each ``{x}▲`` is an atom of the upper family and has a nonempty inverse core."""
    _require_reflexive(R)
    inv = inverse(R)
    atoms = set(_upper_atoms(R))
    for x in range(R.n):
        if inv.succ[x] not in atoms:
            return ConditionResult("rSt", False, {"x": x, "reason": "not an atom", "upper": inv.succ[x]})
        if core(inv, x) == 0:
            return ConditionResult("rSt", False, {"x": x, "reason": "empty inverse core", "upper": inv.succ[x]})
    return ConditionResult("rSt", True)


def check_clinker(R: BinaryRelation) -> ConditionResult:
    """The distinct sets ``{x}▲`` form an irredundant covering of the universe."""
    _require_reflexive(R)
    blocks = sorted(set(inverse(R).succ))
    top = full_mask(R.n)
    union = 0
    for b in blocks:
        union |= b
    if union != top:
        return ConditionResult("clinker", False, {"uncovered": top & ~union})
    for i, b in enumerate(blocks):
        rest = 0
        for j, c in enumerate(blocks):
            if j != i:
                rest |= c
        if rest == top:
            return ConditionResult("clinker", False, {"redundant_block": b, "blocks": blocks})
    return ConditionResult("clinker", True, None)


def upper_inv_decomposition(R: BinaryRelation) -> ConditionResult:
    """Each ``{x}△`` is a union of sets ``{y}△`` whose core is nonempty."""
    _require_reflexive(R)
    good = [y for y in range(R.n) if core(R, y)]
    for x in range(R.n):
        acc = 0
        for y in good:
            if is_subset(R.succ[y], R.succ[x]):
                acc |= R.succ[y]
        if acc != R.succ[x]:
            return ConditionResult("upper_inv_decomposition", False, {"x": x, "covered": acc})
    return ConditionResult("upper_inv_decomposition", True)


def _is_equivalence(succ: list[int]) -> bool:
    n = len(succ)
    for x in range(n):
        if not succ[x] >> x & 1:
            return False
        for y in range(n):
            if succ[x] >> y & 1 and succ[y] != succ[x]:
                return False
    return True


def composition_equivalence_flags(R: BinaryRelation) -> dict[str, bool]:
    """Whether the two readings of the composite of R̆ and R are equivalences.

    ``common_predecessor``: x ~ z when some y has y R x and y R z.
    ``common_successor``:   x ~ z when some y has x R y and z R y.
    """
    inv = inverse(R).succ
    pred = [0] * R.n
    succ = [0] * R.n
    for x in range(R.n):
        for y in range(R.n):
            if inv[x] >> y & 1:
                pred[x] |= R.succ[y]
            if R.succ[x] >> y & 1:
                succ[x] |= inv[y]
    return {"common_predecessor": _is_equivalence(pred), "common_successor": _is_equivalence(succ)}


def st1_composition_conjecture(R: BinaryRelation) -> dict[str, Any]:
    """For quasiorders, compare St1 with the composite being an equivalence (reported, never asserted)."""
    flags = composition_equivalence_flags(R)
    st1 = check_st1(R).holds
    return {
        "st1": st1,
        **flags,
        "agrees_common_predecessor": st1 == flags["common_predecessor"],
        "agrees_common_successor": st1 == flags["common_successor"],
    }


CONDITIONS = {
    "St1": check_st1,
    "St2": check_st2,
    "St1°": check_st1_atom,
    "St2°": check_st2_atom,
    "rSt": check_rst,
    "clinker": check_clinker,
}


def all_conditions(R: BinaryRelation) -> dict[str, ConditionResult]:
    return {name: fn(R) for name, fn in CONDITIONS.items()}
