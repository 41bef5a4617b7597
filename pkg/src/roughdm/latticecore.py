"""Finite lattices given by explicit tables.

Elements are opaque payloads; all structure lives in numpy tables indexed
by element position: a boolean order matrix ``leq`` and integer ``meet`` and
``join`` tables.  Optionally a ``negation`` table carries a De Morgan
candidate.  Every finite lattice is complete, spatial and atomic, and for
finite lattices distributivity coincides with complete distributivity, so
the classifier works with the finite notions only.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Sequence

import numpy as np

DEFAULT_EXHAUSTIVE_LIMIT = 64
DEFAULT_CUT_CAP = 4096
DEFAULT_ISO_CAP = 64


class NotALatticeError(ValueError):
    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class ResourceCapError(RuntimeError):
    """A configured size cap would be exceeded."""


class FiniteLattice:
    def __init__(self, elements: Sequence[Any], leq, meet=None, join=None, negation=None):
        self.elements = list(elements)
        self.leq = np.asarray(leq, dtype=bool)
        m = len(self.elements)
        if self.leq.shape != (m, m):
            raise ValueError("order matrix does not match the element list")
        if m == 0:
            raise NotALatticeError("empty poset has no bounds")
        self.meet = np.asarray(meet, dtype=np.int64) if meet is not None else _bound_table(self.leq, lower=True)
        self.join = np.asarray(join, dtype=np.int64) if join is not None else _bound_table(self.leq, lower=False)
        self.negation = None if negation is None else np.asarray(negation, dtype=np.int64)
        self.bottom = int(np.flatnonzero(self.leq.all(axis=1))[0])
        self.top = int(np.flatnonzero(self.leq.all(axis=0))[0])

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return f"FiniteLattice({len(self)} elements)"

    def index(self, element) -> int:
        return self._index[element]

    @cached_property
    def _index(self):
        return {e: i for i, e in enumerate(self.elements)}

    @property
    def size(self) -> int:
        return len(self.elements)

    def le(self, a: int, b: int) -> bool:
        return bool(self.leq[a, b])

    @cached_property
    def down_size(self):
        return self.leq.sum(axis=0)

    @cached_property
    def cover_matrix(self):
        lt = self.leq & ~np.eye(len(self), dtype=bool)
        lti = lt.astype(np.int32)
        return lt & ((lti @ lti) == 0)

    def hasse_edges(self) -> list[tuple[int, int]]:
        """Pairs ``(a, b)`` with ``b`` covering ``a``."""
        a, b = np.nonzero(self.cover_matrix)
        return sorted(zip(a.tolist(), b.tolist()))

    def lower_covers(self, a: int) -> list[int]:
        return np.flatnonzero(self.cover_matrix[:, a]).tolist()

    def upper_covers(self, a: int) -> list[int]:
        return np.flatnonzero(self.cover_matrix[a]).tolist()

    @cached_property
    def join_irreducibles(self) -> list[int]:
        counts = self.cover_matrix.sum(axis=0)
        return np.flatnonzero(counts == 1).tolist()

    @cached_property
    def meet_irreducibles(self) -> list[int]:
        counts = self.cover_matrix.sum(axis=1)
        return np.flatnonzero(counts == 1).tolist()

    @cached_property
    def atoms(self) -> list[int]:
        return np.flatnonzero(self.cover_matrix[self.bottom]).tolist()

    @cached_property
    def coatoms(self) -> list[int]:
        return np.flatnonzero(self.cover_matrix[:, self.top]).tolist()

    def join_of(self, items) -> int:
        acc = self.bottom
        for i in items:
            acc = int(self.join[acc, i])
        return acc

    def meet_of(self, items) -> int:
        acc = self.top
        for i in items:
            acc = int(self.meet[acc, i])
        return acc

    def dual(self) -> "FiniteLattice":
        return FiniteLattice(self.elements, self.leq.T, self.join, self.meet, self.negation)

    def with_negation(self, negation) -> "FiniteLattice":
        return FiniteLattice(self.elements, self.leq, self.meet, self.join, negation)

    # -- distributivity -------------------------------------------------------

    @cached_property
    def is_distributive(self) -> bool:
        """Exact test: the map ``a -> {j in J | j <= a}`` must preserve joins.

        That map always preserves meets and is injective on a finite
        lattice, so join preservation makes it an embedding into a powerset.
        """
        J = self.join_irreducibles
        if not J:
            return True
        below = self.leq[J, :].T  # element x J
        return bool((below[self.join] == (below[:, None, :] | below[None, :, :])).all())

    def distributive_by_triples(self, *, limit=DEFAULT_EXHAUSTIVE_LIMIT, samples=20000, seed=0):
        """Triple scan of ``x & (y | z) == (x & y) | (x & z)``.

        Returns ``(holds, witness, provenance)``; exhaustive up to ``limit``
        elements, seeded sampling beyond.
        """
        m = len(self)
        mt, jn = self.meet, self.join
        if m <= limit:
            lhs = mt[np.arange(m)[:, None, None], jn[None, :, :]]
            rhs = jn[mt[:, :, None], mt[:, None, :]]
            bad = np.argwhere(lhs != rhs)
            if len(bad):
                return False, tuple(int(v) for v in bad[0]), "exhaustive"
            return True, None, "exhaustive"
        rng = random.Random(seed)
        for _ in range(samples):
            x, y, z = rng.randrange(m), rng.randrange(m), rng.randrange(m)
            if mt[x, jn[y, z]] != jn[mt[x, y], mt[x, z]]:
                return False, (x, y, z), f"sampled({samples})"
        return True, None, f"sampled({samples})"

    def find_m3_n5(self):
        """Search for a diamond or pentagon sublattice; returns ``(kind, elements)`` or None."""
        m = len(self)
        leq, mt, jn = self.leq, self.meet, self.join
        strict = leq & ~np.eye(m, dtype=bool)
        inc = ~leq & ~leq.T
        upper = np.triu(np.ones((m, m), dtype=bool), 1)
        for a in range(m):
            # diamond a < b < c (as indices), pairwise incomparable, common meet and join
            o, i = mt[a], jn[a]
            same = (mt == o[:, None]) & (jn == i[:, None]) & (mt[a][None, :] == o[:, None]) & (jn[a][None, :] == i[:, None])
            cand = inc & upper & same & inc[a][:, None] & inc[a][None, :]
            cand[: a + 1, :] = False
            hit = np.argwhere(cand)
            if len(hit):
                b, c = (int(v) for v in hit[0])
                return "M3", (int(o[b]), a, b, c, int(i[b]))
            # pentagon a < c with b incomparable to both and the same meet and join against b
            cand = strict[a][:, None] & inc & inc[a][None, :] & (mt == mt[a][None, :]) & (jn == jn[a][None, :])
            hit = np.argwhere(cand)
            if len(hit):
                c, b = (int(v) for v in hit[0])
                return "N5", (int(mt[a, b]), a, c, b, int(jn[a, b]))
        return None

    # -- pseudocomplements ----------------------------------------------------

    @cached_property
    def pseudocomplements(self):
        """``a*`` for each element, -1 where no pseudocomplement exists."""
        return _greatest_disjoint(self.leq, self.meet, self.bottom, self.down_size)

    @cached_property
    def dual_pseudocomplements(self):
        """``a+``: least element whose join with ``a`` is the top; -1 when absent."""
        up_size = self.leq.sum(axis=1)
        return _greatest_disjoint(self.leq.T, self.join, self.top, up_size)

    @property
    def is_pseudocomplemented(self) -> bool:
        return bool((self.pseudocomplements >= 0).all())

    @property
    def is_dual_pseudocomplemented(self) -> bool:
        return bool((self.dual_pseudocomplements >= 0).all())

    @cached_property
    def complemented(self):
        """Boolean vector: element has at least one complement."""
        return ((self.meet == self.bottom) & (self.join == self.top)).any(axis=1)

    @cached_property
    def neutral(self):
        m = len(self)
        mt, jn = self.meet, self.join
        out = np.zeros(m, dtype=bool)
        for a in range(m):
            lhs = jn[jn[mt[a][:, None], mt], mt[:, a][None, :]]
            rhs = mt[mt[jn[a][:, None], jn], jn[:, a][None, :]]
            out[a] = bool((lhs == rhs).all())
        return out

    @property
    def center(self) -> list[int]:
        return np.flatnonzero(self.complemented & self.neutral).tolist()

    @property
    def skeleton(self) -> list[int]:
        s = self.pseudocomplements
        if (s < 0).any():
            return []
        return sorted(set(s[s].tolist()))

    def classify(self) -> "AlgebraReport":
        return classify(self)


def _bound_table(leq: np.ndarray, *, lower: bool) -> np.ndarray:
    m = leq.shape[0]
    order = leq if lower else leq.T  # order[c, a]: c is below a (dually above)
    size = order.sum(axis=0)
    out = np.empty((m, m), dtype=np.int64)
    for a in range(m):
        bounds = order[:, a][:, None] & order  # c x b
        score = np.where(bounds, size[:, None] + 1, 0)
        cand = score.argmax(axis=0)
        good = bounds[cand, np.arange(m)] & ~(bounds & ~order[:, cand]).any(axis=0)
        if not good.all():
            b = int(np.flatnonzero(~good)[0])
            kind = "meet" if lower else "join"
            raise NotALatticeError(f"elements {a} and {b} have no {kind}", (a, b))
        out[a] = cand
    return out


def _greatest_disjoint(leq, meet, bottom, down_size):
    m = leq.shape[0]
    disjoint = meet == bottom
    out = np.full(m, -1, dtype=np.int64)
    for a in range(m):
        idx = np.flatnonzero(disjoint[a])
        c = idx[down_size[idx].argmax()]
        if leq[idx, c].all():
            out[a] = c
    return out


# -- constructors ---------------------------------------------------------------


def from_poset(elements, leq) -> FiniteLattice:
    """Lattice from a partial order; raises ``NotALatticeError`` naming a bad pair."""
    leq = np.asarray(leq, dtype=bool)
    m = len(elements)
    if not leq.diagonal().all():
        raise ValueError("order relation is not reflexive")
    if (leq & leq.T & ~np.eye(m, dtype=bool)).any():
        raise ValueError("order relation is not antisymmetric")
    li = leq.astype(np.int32)
    if ((li @ li > 0) & ~leq).any():
        raise ValueError("order relation is not transitive")
    return FiniteLattice(elements, leq)


def from_sets(masks: Sequence[int]) -> FiniteLattice:
    """Lattice of a family of sets (bit masks) ordered by inclusion."""
    m = len(masks)
    leq = np.zeros((m, m), dtype=bool)
    for i, a in enumerate(masks):
        for j, b in enumerate(masks):
            leq[i, j] = a & ~b == 0
    return from_poset(list(masks), leq)


def product_chain(dims: Sequence[int], cap: int = 1 << 16) -> FiniteLattice:
    """Product of chains with componentwise order and componentwise order reversal."""
    if not dims or any(d < 1 for d in dims):
        raise ValueError("chain lengths must be positive")
    total = int(np.prod(dims))
    if total > cap:
        raise ResourceCapError(f"product of chains has {total} elements, cap is {cap}")
    elements = list(itertools.product(*(range(d) for d in dims)))
    arr = np.array(elements, dtype=np.int64).reshape(total, len(dims))
    leq = (arr[:, None, :] <= arr[None, :, :]).all(axis=2)
    index = {e: i for i, e in enumerate(elements)}
    mins = np.minimum(arr[:, None, :], arr[None, :, :])
    maxs = np.maximum(arr[:, None, :], arr[None, :, :])
    strides = np.array([int(np.prod(dims[k + 1:])) for k in range(len(dims))], dtype=np.int64)
    meet = (mins * strides).sum(axis=2)
    join = (maxs * strides).sum(axis=2)
    neg = [index[tuple(d - 1 - c for d, c in zip(dims, e))] for e in elements]
    return FiniteLattice(elements, leq, meet, join, neg)


def boolean_lattice(k: int) -> FiniteLattice:
    return product_chain([2] * k) if k else product_chain([1])


def chain(k: int) -> FiniteLattice:
    return product_chain([k])


# -- Dedekind-MacNeille completion ---------------------------------------------


@dataclass
class Completion:
    lattice: FiniteLattice
    cuts: list[int]  # each cut as a bit mask of poset indices (the lower part)
    embedding: list[int]  # poset index -> lattice index of its principal cut


def dedekind_macneille(elements, leq, cap: int = DEFAULT_CUT_CAP) -> Completion:
    """Cut completion of a finite poset.

    The lower parts of cuts are exactly the intersections of principal
    down-sets (the empty intersection being the whole poset).
    """
    leq = np.asarray(leq, dtype=bool)
    m = len(elements)
    if m > cap:
        raise ResourceCapError(f"poset has {m} elements, cut cap is {cap}")
    principal = [sum(1 << int(q) for q in np.flatnonzero(leq[:, p])) for p in range(m)]
    top = (1 << m) - 1
    closed = {top}
    for g in principal:
        closed |= {c & g for c in closed}
    cuts = sorted(closed, key=lambda c: (c.bit_count(), c))
    bits = np.array([[c >> i & 1 for i in range(m)] for c in cuts], dtype=np.int32).reshape(len(cuts), m)
    order = (bits @ (1 - bits).T) == 0
    lat = FiniteLattice(cuts, order)
    pos = {c: i for i, c in enumerate(cuts)}
    return Completion(lat, cuts, [pos[principal[p]] for p in range(m)])


# -- isomorphism ------------------------------------------------------------------


def _invariants(L: FiniteLattice):
    cov = L.cover_matrix
    return list(zip(L.leq.sum(axis=0).tolist(), L.leq.sum(axis=1).tolist(),
                    cov.sum(axis=0).tolist(), cov.sum(axis=1).tolist()))


def is_isomorphic(L1: FiniteLattice, L2: FiniteLattice, cap: int = DEFAULT_ISO_CAP):
    """Order isomorphism by backtracking over invariant classes.

    Returns the mapping (list: index in ``L1`` -> index in ``L2``) or None.
    """
    if max(len(L1), len(L2)) > cap:
        raise ResourceCapError(f"isomorphism test limited to {cap} elements")
    if len(L1) != len(L2):
        return None
    inv1, inv2 = _invariants(L1), _invariants(L2)
    if sorted(inv1) != sorted(inv2):
        return None
    m = len(L1)
    order = sorted(range(m), key=lambda a: (inv1[a][0], a))
    buckets: dict = {}
    for b in range(m):
        buckets.setdefault(inv2[b], []).append(b)
    mapping = [-1] * m
    used = [False] * m
    leq1, leq2 = L1.leq, L2.leq

    def extend(k):
        if k == m:
            return True
        a = order[k]
        for b in buckets[inv1[a]]:
            if used[b]:
                continue
            ok = True
            for prev in order[:k]:
                pb = mapping[prev]
                if leq1[a, prev] != leq2[b, pb] or leq1[prev, a] != leq2[pb, b]:
                    ok = False
                    break
            if ok:
                mapping[a] = b
                used[b] = True
                if extend(k + 1):
                    return True
                used[b] = False
                mapping[a] = -1
        return False

    return list(mapping) if extend(0) else None


def is_order_isomorphism(L1: FiniteLattice, L2: FiniteLattice, mapping) -> bool:
    if mapping is None or len(mapping) != len(L1) or len(set(mapping)) != len(L2):
        return False
    idx = np.asarray(mapping)
    return bool((L1.leq == L2.leq[np.ix_(idx, idx)]).all())


# -- structural predicates ---------------------------------------------------------


def two_levels(L: FiniteLattice) -> bool:
    """Every join-irreducible strictly below another join-irreducible is an atom."""
    J = L.join_irreducibles
    atoms = set(L.atoms)
    for j in J:
        for k in J:
            if j != k and L.leq[j, k] and j not in atoms:
                return False
    return True


def longest_irreducible_chain(L: FiniteLattice) -> int:
    J = L.join_irreducibles
    if not J:
        return 0
    sub = L.leq[np.ix_(J, J)] & ~np.eye(len(J), dtype=bool)
    order = sorted(range(len(J)), key=lambda i: L.down_size[J[i]])
    best = [1] * len(J)
    for pos, i in enumerate(order):
        for k in order[:pos]:
            if sub[k, i]:
                best[i] = max(best[i], best[k] + 1)
    return max(best)


def is_atomistic(L: FiniteLattice) -> bool:
    return set(L.join_irreducibles) <= set(L.atoms)


def stone_by_irreducibles(L: FiniteLattice):
    """For each join-irreducible ``j``, any two nonzero elements below ``j`` meet above zero.

    Returns ``(holds, witness)`` with witness ``(j, x, y)``.
    """
    bot = L.bottom
    for j in L.join_irreducibles:
        below = [x for x in np.flatnonzero(L.leq[:, j]).tolist() if x != bot]
        for x, y in itertools.combinations(below, 2):
            if L.meet[x, y] == bot:
                return False, (j, x, y)
    return True, None


def set_representation(L: FiniteLattice):
    """Map each element to the mask of join-irreducibles below it.

    For a distributive lattice the image is a family of sets closed under
    union and intersection and the map is a lattice isomorphism onto it;
    otherwise None.
    """
    J = L.join_irreducibles
    reps = [sum(1 << k for k, j in enumerate(J) if L.leq[j, a]) for a in range(len(L))]
    for a in range(len(L)):
        for b in range(len(L)):
            if reps[L.join[a, b]] != reps[a] | reps[b] or reps[L.meet[a, b]] != reps[a] & reps[b]:
                return None
    if len(set(reps)) != len(reps):
        return None
    return reps


def boolean_atom_representation(L: FiniteLattice):
    """For a Boolean lattice, element -> mask of atoms below; bijective onto all atom subsets."""
    atoms = L.atoms
    reps = [sum(1 << k for k, t in enumerate(atoms) if L.leq[t, a]) for a in range(len(L))]
    if sorted(reps) != list(range(1 << len(atoms))):
        return None
    return reps


def p_algebra_violations(L: FiniteLattice) -> list[tuple[str, tuple]]:
    """Check the standard pseudocomplement identities; empty list when they all hold."""
    s = L.pseudocomplements
    if (s < 0).any():
        return [("pseudocomplemented", (int(np.flatnonzero(s < 0)[0]),))]
    out = []
    leq, mt, jn = L.leq, L.meet, L.join
    ss, sss = s[s], s[s[s]]
    m = len(L)
    idx = np.arange(m)
    # (a) antitone
    bad = np.argwhere(leq & ~leq[s][:, s].T)
    if len(bad):
        out.append(("a", tuple(bad[0].tolist())))
    # (b) a -> a** is extensive, monotone, idempotent
    if not leq[idx, ss].all():
        out.append(("b-extensive", (int(np.flatnonzero(~leq[idx, ss])[0]),)))
    bad = np.argwhere(leq & ~leq[ss][:, ss])
    if len(bad):
        out.append(("b-monotone", tuple(bad[0].tolist())))
    if not (ss[ss] == ss).all():
        out.append(("b-idempotent", (int(np.flatnonzero(ss[ss] != ss)[0]),)))
    # (c)
    if not (sss == s).all():
        out.append(("c", (int(np.flatnonzero(sss != s)[0]),)))
    # (d) (a v b)* = a* & b*
    bad = np.argwhere(s[jn] != mt[s[:, None], s[None, :]])
    if len(bad):
        out.append(("d", tuple(bad[0].tolist())))
    # (e) (a & b)* >= a* v b*
    bad = np.argwhere(~leq[jn[s[:, None], s[None, :]], s[mt]])
    if len(bad):
        out.append(("e", tuple(bad[0].tolist())))
    return out


def stone_characterizations(L: FiniteLattice) -> dict[str, bool]:
    """The four equivalent descriptions of Stone algebras among distributive p-algebras."""
    s = L.pseudocomplements
    mt, jn = L.meet, L.join
    skel = set(s[s].tolist())
    return {
        "stone_equation": bool((jn[s, s[s]] == L.top).all()),
        "meet_pseudo": bool((s[mt] == jn[s[:, None], s[None, :]]).all()),
        "skeleton_join_closed": all(int(jn[a, b]) in skel for a in skel for b in skel),
        "skeleton_subalgebra": all(int(jn[a, b]) in skel and int(mt[a, b]) in skel for a in skel for b in skel)
        and L.top in skel and L.bottom in skel,
    }


def negation_violations(L: FiniteLattice) -> list[tuple[str, tuple]]:
    """De Morgan and Kleene laws for ``L.negation``."""
    neg = L.negation
    if neg is None:
        return [("negation", ())]
    out = []
    m = len(L)
    if not (neg[neg] == np.arange(m)).all():
        out.append(("double_negation", (int(np.flatnonzero(neg[neg] != np.arange(m))[0]),)))
    bad = np.argwhere(neg[L.join] != L.meet[neg[:, None], neg[None, :]])
    if len(bad):
        out.append(("de_morgan_join", tuple(bad[0].tolist())))
    bad = np.argwhere(neg[L.meet] != L.join[neg[:, None], neg[None, :]])
    if len(bad):
        out.append(("de_morgan_meet", tuple(bad[0].tolist())))
    return out


def kleene_violations(L: FiniteLattice) -> list[tuple[str, tuple]]:
    out = negation_violations(L)
    if out:
        return out
    neg = L.negation
    idx = np.arange(len(L))
    low = L.meet[idx, neg]
    high = L.join[idx, neg]
    bad = np.argwhere(~L.leq[low[:, None], high[None, :]])
    if len(bad):
        out.append(("K", tuple(bad[0].tolist())))
    return out


# -- classification ------------------------------------------------------------------

FLAG_NAMES = (
    "lattice",
    "distributive",
    "boolean",
    "atomistic",
    "pseudocomplemented",
    "dual_pseudocomplemented",
    "stone",
    "dual_stone",
    "double_stone",
    "regular_condition_M",
    "de_morgan",
    "kleene",
)


@dataclass
class AlgebraReport:
    size: int
    flags: dict[str, bool] = field(default_factory=dict)
    witnesses: dict[str, Any] = field(default_factory=dict)
    provenance: dict[str, str] = field(default_factory=dict)
    center: list[int] = field(default_factory=list)
    skeleton: list[int] = field(default_factory=list)
    note: str = ("finite lattice: spatial, atomic and algebraic automatically; "
                 "distributive is equivalent to completely distributive")

    def __getitem__(self, key):
        if key == "regular_double_stone":
            return self.regular_double_stone
        return self.flags[key]

    @property
    def regular_double_stone(self) -> bool:
        return self.flags["double_stone"] and self.flags["regular_condition_M"]

    def as_dict(self):
        return {
            "size": self.size,
            "flags": dict(self.flags),
            "witnesses": {k: v for k, v in self.witnesses.items()},
            "provenance": dict(self.provenance),
            "center": list(self.center),
            "skeleton": list(self.skeleton),
            "note": self.note,
        }


def classify(L: FiniteLattice) -> AlgebraReport:
    m = len(L)
    rep = AlgebraReport(m)
    f, w = rep.flags, rep.witnesses
    f["lattice"] = True
    for name in FLAG_NAMES:
        rep.provenance[name] = "exhaustive"

    f["distributive"] = L.is_distributive
    if not f["distributive"]:
        w["distributive"] = {"failing_triple": L.distributive_by_triples(limit=max(m, 1))[1]}

    comp = L.complemented
    f["boolean"] = f["distributive"] and bool(comp.all())
    if not f["boolean"]:
        w["boolean"] = ({"uncomplemented": int(np.flatnonzero(~comp)[0])} if not comp.all()
                        else {"not_distributive": True})
    f["atomistic"] = is_atomistic(L)
    if not f["atomistic"]:
        w["atomistic"] = {"non_atom_join_irreducible": sorted(set(L.join_irreducibles) - set(L.atoms))[0]}

    star, plus = L.pseudocomplements, L.dual_pseudocomplements
    f["pseudocomplemented"] = bool((star >= 0).all())
    if not f["pseudocomplemented"]:
        w["pseudocomplemented"] = {"no_pseudocomplement": int(np.flatnonzero(star < 0)[0])}
    f["dual_pseudocomplemented"] = bool((plus >= 0).all())
    if not f["dual_pseudocomplemented"]:
        w["dual_pseudocomplemented"] = {"no_dual_pseudocomplement": int(np.flatnonzero(plus < 0)[0])}

    f["stone"] = False
    if f["pseudocomplemented"] and f["distributive"]:
        bad = np.flatnonzero(L.join[star, star[star]] != L.top)
        f["stone"] = not len(bad)
        if len(bad):
            w["stone"] = {"x": int(bad[0]), "x*": int(star[bad[0]]), "x**": int(star[star[bad[0]]])}
    else:
        w["stone"] = {"requires": "distributive pseudocomplemented"}
    f["dual_stone"] = False
    if f["dual_pseudocomplemented"] and f["distributive"]:
        bad = np.flatnonzero(L.meet[plus, plus[plus]] != L.bottom)
        f["dual_stone"] = not len(bad)
        if len(bad):
            w["dual_stone"] = {"x": int(bad[0]), "x+": int(plus[bad[0]]), "x++": int(plus[plus[bad[0]]])}
    else:
        w["dual_stone"] = {"requires": "distributive dual pseudocomplemented"}
    f["double_stone"] = f["stone"] and f["dual_stone"]
    if not f["double_stone"]:
        w["double_stone"] = {"stone": f["stone"], "dual_stone": f["dual_stone"]}

    if f["pseudocomplemented"] and f["dual_pseudocomplemented"]:
        seen: dict = {}
        f["regular_condition_M"] = True
        for x in range(m):
            key = (int(star[x]), int(plus[x]))
            if key in seen:
                f["regular_condition_M"] = False
                w["regular_condition_M"] = {"x": seen[key], "y": x, "x*": key[0], "x+": key[1]}
                break
            seen[key] = x
    else:
        f["regular_condition_M"] = False
        w["regular_condition_M"] = {"requires": "double pseudocomplemented"}

    if L.negation is None:
        f["de_morgan"] = f["kleene"] = False
        w["de_morgan"] = w["kleene"] = {"requires": "negation table"}
        rep.provenance["de_morgan"] = rep.provenance["kleene"] = "not evaluated"
    else:
        dm = negation_violations(L)
        f["de_morgan"] = f["distributive"] and not dm
        if not f["de_morgan"]:
            w["de_morgan"] = dm[0] if dm else {"not_distributive": True}
        kv = kleene_violations(L) if f["de_morgan"] else []
        f["kleene"] = f["de_morgan"] and not kv
        if not f["kleene"]:
            w["kleene"] = kv[0] if kv else {"requires": "De Morgan algebra"}

    rep.center = L.center
    rep.skeleton = L.skeleton
    return rep
