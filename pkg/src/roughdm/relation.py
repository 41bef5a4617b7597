"""Binary relations on a finite universe, stored as successor bit-vectors.

A subset of the universe ``{0, ..., n-1}`` is a plain ``int`` whose bit ``x``
is set when ``x`` belongs to the subset.  ``BinaryRelation.succ[x]`` is the
neighbourhood ``R(x) = {y | (x, y) in R}``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

MAX_UNIVERSE = 64

Subset = int


class RelationError(ValueError):
    """Invalid relation, generator parameters or universe."""


# -- bit-vector helpers -------------------------------------------------------


def mask_of(elements: Iterable[int]) -> Subset:
    m = 0
    for x in elements:
        m |= 1 << x
    return m


def iter_bits(mask: Subset):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def elements_of(mask: Subset) -> list[int]:
    return list(iter_bits(mask))


def full_mask(n: int) -> Subset:
    return (1 << n) - 1


def is_subset(a: Subset, b: Subset) -> bool:
    return a & ~b == 0


def format_subset(mask: Subset, labels: Sequence[str] | None = None, n: int | None = None) -> str:
    """Compact notation: ``{0, 2}`` prints as ``13`` with default 1-based labels."""
    if mask == 0:
        return "∅"
    if labels is None:
        labels = [str(i + 1) for i in range((n or mask.bit_length()))]
    parts = [labels[x] for x in iter_bits(mask)]
    if all(len(p) == 1 for p in parts):
        return "".join(parts)
    return ",".join(parts)


# -- the relation type --------------------------------------------------------


@dataclass(frozen=True)
class BinaryRelation:
    n: int
    succ: tuple[int, ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise RelationError(f"universe size must be >= 1, got {self.n!r}")
        if self.n > MAX_UNIVERSE:
            raise RelationError(f"universe size {self.n} exceeds the {MAX_UNIVERSE}-element limit")
        object.__setattr__(self, "succ", tuple(int(s) for s in self.succ))
        if len(self.succ) != self.n:
            raise RelationError(f"expected {self.n} neighbourhoods, got {len(self.succ)}")
        top = full_mask(self.n)
        for x, s in enumerate(self.succ):
            if s < 0 or s & ~top:
                raise RelationError(f"neighbourhood of {x} leaves the universe")
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(str(l) for l in self.labels))
            if len(self.labels) != self.n:
                raise RelationError("label table must have one entry per element")

    @classmethod
    def from_neighborhoods(cls, neighborhoods, *, one_based=False, labels=None, reflexive=False):
        """Build from a list of neighbourhoods given as iterables of elements.

        With ``reflexive=True`` the construction fails unless ``x in R(x)``
        for every ``x``.
        """
        shift = 1 if one_based else 0
        n = len(neighborhoods)
        succ = []
        for x, nb in enumerate(neighborhoods):
            items = [int(y) - shift for y in nb]
            bad = [y + shift for y in items if not 0 <= y < n]
            if bad:
                raise RelationError(f"neighbourhood of element {x + shift} contains {bad}, outside the universe")
            succ.append(mask_of(items))
        rel = cls(n, tuple(succ), tuple(labels) if labels is not None else None)
        if reflexive and not rel.is_reflexive():
            raise RelationError("relation is not reflexive")
        return rel

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]):
        succ = [0] * n
        for x, y in pairs:
            succ[x] |= 1 << y
        return cls(n, tuple(succ))

    @property
    def universe(self) -> Subset:
        return full_mask(self.n)

    def label_list(self) -> list[str]:
        return list(self.labels) if self.labels else [str(i + 1) for i in range(self.n)]

    def __call__(self, x: int) -> Subset:
        return self.succ[x]

    def related(self, x: int, y: int) -> bool:
        return bool(self.succ[x] >> y & 1)

    def pairs(self) -> list[tuple[int, int]]:
        return [(x, y) for x in range(self.n) for y in iter_bits(self.succ[x])]

    def is_reflexive(self) -> bool:
        return all(s >> x & 1 for x, s in enumerate(self.succ))

    def neighborhoods(self) -> list[list[int]]:
        return [elements_of(s) for s in self.succ]

    def __repr__(self):
        nbs = ", ".join(format_subset(s, self.labels, self.n) for s in self.succ)
        return f"BinaryRelation(n={self.n}, R=[{nbs}])"


# -- operations ---------------------------------------------------------------


def inverse(R: BinaryRelation) -> BinaryRelation:
    succ = [0] * R.n
    for x, s in enumerate(R.succ):
        for y in iter_bits(s):
            succ[y] |= 1 << x
    return BinaryRelation(R.n, tuple(succ), R.labels)


@dataclass(frozen=True)
class RelationFlags:
    reflexive: bool
    symmetric: bool
    transitive: bool

    @property
    def quasiorder(self) -> bool:
        return self.reflexive and self.transitive

    @property
    def tolerance(self) -> bool:
        return self.reflexive and self.symmetric

    @property
    def equivalence(self) -> bool:
        return self.reflexive and self.symmetric and self.transitive

    def as_dict(self) -> dict[str, bool]:
        return {
            "reflexive": self.reflexive,
            "symmetric": self.symmetric,
            "transitive": self.transitive,
            "quasiorder": self.quasiorder,
            "tolerance": self.tolerance,
            "equivalence": self.equivalence,
        }


def classify_relation(R: BinaryRelation) -> RelationFlags:
    succ = R.succ
    symmetric = all(succ[y] >> x & 1 for x in range(R.n) for y in iter_bits(succ[x]))
    # R o R within R: for every (x, y) in R, R(y) must lie in R(x)
    transitive = all(is_subset(succ[y], succ[x]) for x in range(R.n) for y in iter_bits(succ[x]))
    return RelationFlags(R.is_reflexive(), symmetric, transitive)


def singletons(R: BinaryRelation) -> Subset:
    """Elements whose neighbourhood has exactly one element."""
    return mask_of(x for x, s in enumerate(R.succ) if s and s & (s - 1) == 0)


def core(R: BinaryRelation, x: int) -> Subset:
    """``{w in R(x) | w in R(y) implies R(x) <= R(y)}``.

    Call with ``inverse(R)`` for the core of an inverse neighbourhood.
    """
    rx = R.succ[x]
    blocked = 0
    for s in R.succ:
        if not is_subset(rx, s):
            blocked |= s
    return rx & ~blocked


def cores(R: BinaryRelation) -> list[Subset]:
    return [core(R, x) for x in range(R.n)]


def reflexive_transitive_closure(R: BinaryRelation) -> BinaryRelation:
    succ = [s | 1 << x for x, s in enumerate(R.succ)]
    changed = True
    while changed:
        changed = False
        for x in range(R.n):
            acc = succ[x]
            for y in iter_bits(succ[x]):
                acc |= succ[y]
            if acc != succ[x]:
                succ[x] = acc
                changed = True
    return BinaryRelation(R.n, tuple(succ), R.labels)


# -- coverings ----------------------------------------------------------------


def _check_covering(n: int, blocks: Sequence[Subset], *, irredundant: bool) -> None:
    if not blocks:
        raise RelationError("a covering needs at least one block")
    top = full_mask(n)
    union = 0
    for b in blocks:
        if b == 0:
            raise RelationError("covering blocks must be nonempty")
        if b & ~top:
            raise RelationError("covering block leaves the universe")
        union |= b
    if union != top:
        raise RelationError(f"blocks do not cover the universe (missing {elements_of(top & ~union)})")
    if irredundant and not is_irredundant_covering(n, blocks):
        raise RelationError("covering is redundant")


def is_irredundant_covering(n: int, blocks: Sequence[Subset]) -> bool:
    """True when the distinct blocks cover the universe and none can be dropped."""
    distinct = list(dict.fromkeys(blocks))
    top = full_mask(n)
    if not distinct or 0 in distinct:
        return False
    total = 0
    for b in distinct:
        total |= b
    if total != top:
        return False
    for i in range(len(distinct)):
        rest = 0
        for j, b in enumerate(distinct):
            if j != i:
                rest |= b
        if rest == top:
            return False
    return True


def _as_masks(blocks, one_based: bool) -> list[Subset]:
    shift = 1 if one_based else 0
    out = []
    for b in blocks:
        out.append(b if isinstance(b, int) else mask_of(int(y) - shift for y in b))
    return out


def _random_partition(n: int, rng: random.Random) -> list[Subset]:
    k = rng.randint(1, n)
    blocks = [0] * k
    order = list(range(n))
    rng.shuffle(order)
    for i, x in enumerate(order):
        blocks[i if i < k else rng.randrange(k)] |= 1 << x
    return blocks


def _random_irredundant_covering(n: int, rng: random.Random) -> tuple[list[Subset], list[int]]:
    """Blocks each owning a private element, plus one surjective assignment."""
    k = rng.randint(1, n)
    order = list(range(n))
    rng.shuffle(order)
    private, others = order[:k], order[k:]
    blocks = [1 << p for p in private]
    for x in others:
        chosen = [i for i in range(k) if rng.random() < 0.5] or [rng.randrange(k)]
        for i in chosen:
            blocks[i] |= 1 << x
    assignment = [0] * n
    for i, p in enumerate(private):
        assignment[p] = i
    for x in others:
        assignment[x] = rng.choice([i for i in range(k) if blocks[i] >> x & 1])
    return blocks, assignment


# -- generators ---------------------------------------------------------------


def identity(n: int) -> BinaryRelation:
    return BinaryRelation(n, tuple(1 << x for x in range(n)))


def full(n: int) -> BinaryRelation:
    return BinaryRelation(n, (full_mask(n),) * n)


def random_reflexive(n: int, density: float = 0.3, seed=None) -> BinaryRelation:
    if not 0.0 <= density <= 1.0:
        raise RelationError("density must lie in [0, 1]")
    rng = random.Random(seed)
    succ = []
    for x in range(n):
        s = 1 << x
        for y in range(n):
            if y != x and rng.random() < density:
                s |= 1 << y
        succ.append(s)
    return BinaryRelation(n, tuple(succ))


def random_quasiorder(n: int, density: float = 0.15, seed=None) -> BinaryRelation:
    return reflexive_transitive_closure(random_reflexive(n, density, seed))


def tolerance_from_covering(n: int, blocks, *, irredundant=False, one_based=False) -> BinaryRelation:
    masks = _as_masks(blocks, one_based)
    _check_covering(n, masks, irredundant=irredundant)
    succ = [0] * n
    for b in masks:
        for x in iter_bits(b):
            succ[x] |= b
    return BinaryRelation(n, tuple(succ))


def equivalence_from_partition(n: int, blocks, *, one_based=False) -> BinaryRelation:
    masks = _as_masks(blocks, one_based)
    _check_covering(n, masks, irredundant=False)
    seen = 0
    for b in masks:
        if seen & b:
            raise RelationError("partition blocks overlap")
        seen |= b
    return tolerance_from_covering(n, masks)


def clinker_from_irredundant_covering(n: int, blocks, assignment, *, one_based=False) -> BinaryRelation:
    """Relation whose inverse neighbourhood of ``x`` is the block assigned to ``x``.

    ``assignment[x]`` is an index into ``blocks``; the block must contain
    ``x`` and every block must be used.
    """
    masks = _as_masks(blocks, one_based)
    _check_covering(n, masks, irredundant=True)
    if len(assignment) != n:
        raise RelationError("assignment needs one block index per element")
    used = set()
    inv = []
    for x, i in enumerate(assignment):
        if not 0 <= i < len(masks):
            raise RelationError(f"assignment of element {x} is not a block index")
        if not masks[i] >> x & 1:
            raise RelationError(f"element {x} is not in its assigned block")
        used.add(i)
        inv.append(masks[i])
    if len(used) != len(masks):
        raise RelationError("assignment is not surjective onto the blocks")
    return inverse(BinaryRelation(n, tuple(inv)))


def misclassification(X: frozenset | set, Y: frozenset | set) -> Fraction:
    """Relative degree of misclassification of ``X`` with respect to ``Y``."""
    if not X:
        return Fraction(0)
    return 1 - Fraction(len(set(X) & set(Y)), len(X))


def information_system(table: Sequence[Sequence[Iterable]], beta) -> BinaryRelation:
    """Directional similarity from a many-valued information system.

    ``table[x][a]`` is the value set of attribute ``a`` on object ``x``.
    ``(x, y)`` is related when every attribute satisfies
    ``c(a(x), a(y)) <= beta``.
    """
    b = Fraction(str(beta)) if isinstance(beta, float) else Fraction(beta)
    if not 0 <= b <= 1:
        raise RelationError("beta must lie in [0, 1]")
    rows = [[frozenset(v) for v in row] for row in table]
    if not rows:
        raise RelationError("information table is empty")
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise RelationError("every object needs the same attributes")
    n = len(rows)
    succ = []
    for x in range(n):
        s = 0
        for y in range(n):
            if all(misclassification(rows[x][a], rows[y][a]) <= b for a in range(width)):
                s |= 1 << y
        succ.append(s)
    return BinaryRelation(n, tuple(succ))


# Spoken languages of five people; one attribute.
SAMPLE_LANGUAGE_TABLE = (
    ({"en", "fr"},),
    ({"en", "fr", "de"},),
    ({"fi", "sv", "en"},),
    ({"en", "fr", "de", "hu"},),
    ({"fi", "sv"},),
)

GENERATOR_KINDS = (
    "identity",
    "full",
    "random_reflexive",
    "random_quasiorder",
    "tolerance_from_covering",
    "equivalence_from_partition",
    "clinker_from_irredundant_covering",
    "information_system",
)


KIND_ALIASES = {
    "tolerance": "tolerance_from_covering",
    "equivalence": "equivalence_from_partition",
    "clinker": "clinker_from_irredundant_covering",
}


def generate(kind: str, n: int | None = None, seed=None, **params) -> BinaryRelation:
    """Deterministic generator front end used by the CLI and campaigns.

    Covering-based kinds draw random blocks from ``seed`` when ``blocks``
    is not given.
    """
    kind = kind.replace("-", "_")
    kind = KIND_ALIASES.get(kind, kind)
    rng = random.Random(seed)
    if kind == "information_system":
        return information_system(params.get("table", SAMPLE_LANGUAGE_TABLE), params.get("beta", 0))
    if n is None:
        raise RelationError(f"kind {kind!r} needs a universe size")
    if kind == "identity":
        return identity(n)
    if kind == "full":
        return full(n)
    if kind == "random_reflexive":
        return random_reflexive(n, params.get("density", 0.3), rng.getrandbits(64))
    if kind == "random_quasiorder":
        return random_quasiorder(n, params.get("density", 0.15), rng.getrandbits(64))
    if kind == "tolerance_from_covering":
        blocks = params.get("blocks")
        if blocks is None:
            blocks, _ = _random_irredundant_covering(n, rng)
        return tolerance_from_covering(n, blocks, irredundant=params.get("irredundant", False),
                                       one_based=params.get("one_based", False))
    if kind == "equivalence_from_partition":
        blocks = params.get("blocks")
        if blocks is None:
            blocks = _random_partition(n, rng)
        return equivalence_from_partition(n, blocks, one_based=params.get("one_based", False))
    if kind == "clinker_from_irredundant_covering":
        blocks, assignment = params.get("blocks"), params.get("assignment")
        if blocks is None:
            blocks, assignment = _random_irredundant_covering(n, rng)
        elif assignment is None:
            raise RelationError("explicit blocks need an explicit assignment")
        return clinker_from_irredundant_covering(n, blocks, assignment, one_based=params.get("one_based", False))
    raise RelationError(f"unknown generator kind {kind!r}; expected one of {', '.join(GENERATOR_KINDS)}")
