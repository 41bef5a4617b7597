"""Command line interface, relation JSON, DOT export and analysis reports.

Exit codes: 0 success, 1 property or campaign failure, 2 usage or input
error, 3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import asdict, dataclass, field
from typing import Any

from . import conditions as cond
from .families import KINDS, family_irreducibles
from .latticecore import DEFAULT_ISO_CAP, FiniteLattice, ResourceCapError, is_isomorphic, product_chain
from .relation import (
    BinaryRelation,
    RelationError,
    classify_relation,
    format_subset,
    generate,
)
from .roughlattice import RoughSetSystem
from .verify import CampaignConfig, run_campaign

EXIT_OK, EXIT_FAILURE, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3
DEFAULT_MAX_ELEMENTS = 4096
ENV_MAX_ELEMENTS = "ROUGH_LATTICE_MAX_ELEMENTS"

class RelationParseError(ValueError):
    """Malformed relation document; the message names the offending position."""


# -- relation JSON -------------------------------------------------------------------


def relation_to_dict(R: BinaryRelation) -> dict:
    d: dict[str, Any] = {"universe_size": R.n}
    if R.labels is not None:
        d["labels"] = list(R.labels)
    d["neighborhoods"] = R.neighborhoods()
    return d


def dumps_relation(R: BinaryRelation) -> str:
    return json.dumps(relation_to_dict(R), ensure_ascii=False)


def relation_from_dict(doc: Any) -> BinaryRelation:
    if not isinstance(doc, dict):
        raise RelationParseError("at $: expected an object with universe_size and neighborhoods")
    for key in ("universe_size", "neighborhoods"):
        if key not in doc:
            raise RelationParseError(f"at $: missing required key {key!r}")
    unknown = set(doc) - {"universe_size", "labels", "neighborhoods"}
    if unknown:
        raise RelationParseError(f"at $: unexpected key(s) {sorted(unknown)}")
    n = doc["universe_size"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise RelationParseError(f"at $.universe_size: expected a positive integer, got {n!r}")
    nbs = doc["neighborhoods"]
    if not isinstance(nbs, list) or len(nbs) != n:
        raise RelationParseError(f"at $.neighborhoods: expected a list of {n} neighbourhoods")
    for x, nb in enumerate(nbs):
        if not isinstance(nb, list):
            raise RelationParseError(f"at $.neighborhoods[{x}]: expected a list of element indices")
        for k, y in enumerate(nb):
            if not isinstance(y, int) or isinstance(y, bool) or not 0 <= y < n:
                raise RelationParseError(f"at $.neighborhoods[{x}][{k}]: {y!r} is not an index in 0..{n - 1}")
    labels = doc.get("labels")
    if labels is not None:
        if not isinstance(labels, list) or len(labels) != n or not all(isinstance(s, str) for s in labels):
            raise RelationParseError(f"at $.labels: expected {n} strings")
    try:
        return BinaryRelation.from_neighborhoods(nbs, labels=labels)
    except RelationError as exc:
        raise RelationParseError(f"at $: {exc}") from None


def loads_relation(text: str) -> BinaryRelation:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise RelationParseError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return relation_from_dict(doc)


def read_relation(path: str) -> BinaryRelation:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    try:
        return loads_relation(text)
    except RelationParseError as exc:
        raise RelationParseError(f"{path}: {exc}") from None


# -- formatting ------------------------------------------------------------------------


def _label_table(R: BinaryRelation, zero_based: bool = False) -> list[str]:
    if zero_based:
        return [str(i) for i in range(R.n)]
    return R.label_list()


def format_pair(p, labels, n) -> str:
    return f"({format_subset(p[0], labels, n)}, {format_subset(p[1], labels, n)})"


def hasse_dot(S: RoughSetSystem, *, zero_based: bool = False, name: str = "DMRS") -> str:
    """Hasse diagram of DM(RS) in DOT syntax; one edge per covering pair, drawn upward."""
    labels = _label_table(S.relation, zero_based)
    L = S.lattice
    rs = set(S.rs_indices)
    lines = [f"digraph {name} {{", "  rankdir=BT;", '  node [shape=plaintext, fontname="Helvetica"];']
    for i, p in enumerate(S.pairs):
        style = "" if i in rs else ", fontcolor=gray40"
        lines.append(f'  n{i} [label="{format_pair(p, labels, S.n)}"{style}];')
    for a, b in L.hasse_edges():
        lines.append(f"  n{a} -> n{b} [arrowhead=none];")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- analysis report -------------------------------------------------------------------------


def chain_products(size: int, cap: int = DEFAULT_ISO_CAP) -> list[tuple[int, ...]]:
    """Non-increasing tuples of chain lengths (each >= 2) whose product is ``size``."""
    out = []

    def rec(rest, largest, acc):
        if rest == 1:
            if acc:
                out.append(tuple(acc))
            return
        for d in range(min(rest, largest), 1, -1):
            if rest % d == 0:
                rec(rest // d, d, acc + [d])

    if 1 < size <= cap:
        rec(size, size, [])
    return out


def isomorphism_hits(L: FiniteLattice, cap: int = DEFAULT_ISO_CAP) -> list[str]:
    hits = []
    for dims in chain_products(len(L), cap):
        if is_isomorphic(L, product_chain(dims), cap) is not None:
            hits.append("x".join(str(d) for d in sorted(dims)))
    return hits


def format_witness(w, labels, n):
    """Render masks as compact sets and element indices with their labels."""
    if w is None:
        return None
    out = {}
    for k, v in w.items():
        if k in ("x", "y", "p", "z") and isinstance(v, int):
            out[k] = labels[v]
        elif k in ("bound", "intersection", "upper", "redundant_block", "uncovered", "covered") and isinstance(v, int):
            out[k] = format_subset(v, labels, n)
        elif k in ("atoms", "blocks") and isinstance(v, list):
            out[k] = [format_subset(b, labels, n) for b in v]
        else:
            out[k] = v
    return out


def _format_algebra_witness(w, pairs, labels, n):
    if not isinstance(w, dict):
        return w
    out = {}
    for k, v in w.items():
        if isinstance(v, int) and not isinstance(v, bool) and k not in ("requires",):
            out[k] = format_pair(pairs[v], labels, n)
        elif isinstance(v, tuple):
            out[k] = [format_pair(pairs[i], labels, n) for i in v]
        else:
            out[k] = v
    return out


@dataclass
class AnalysisReport:
    relation: dict
    relation_flags: dict
    families: dict
    rs_size: int
    dm_size: int
    rs_equals_dm: bool
    algebra: dict
    conditions: dict
    isomorphic_to: list
    isomorphism_checked: bool
    provenance: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> "AnalysisReport":
        return cls(**d)

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, ensure_ascii=False)

    def to_text(self) -> str:
        rel = self.relation
        labels = rel.get("labels") or [str(i + 1) for i in range(rel["universe_size"])]
        lines = [f"relation on {rel['universe_size']} points"]
        for x, nb in enumerate(rel["neighborhoods"]):
            lines.append(f"  R({labels[x]}) = {{{', '.join(labels[y] for y in nb)}}}")
        lines.append("  " + ", ".join(f"{k}={v}" for k, v in self.relation_flags.items()))
        lines.append("families")
        for kind, info in self.families.items():
            lines.append(f"  {kind:<10} size={info['size']:<4} distributive={info['distributive']} "
                         f"boolean={info['boolean']} atoms={' '.join(info['atoms']) or '-'}")
        lines.append(f"|RS| = {self.rs_size}, |DM(RS)| = {self.dm_size}, RS = DM(RS): {self.rs_equals_dm}")
        lines.append("algebra of DM(RS)")
        flags = self.algebra["flags"]
        for name, value in flags.items():
            wit = self.algebra["witnesses"].get(name)
            suffix = f"  witness {wit}" if (wit and not value) else ""
            lines.append(f"  {name:<24} {value}{suffix}")
        lines.append(f"  {'regular_double_stone':<24} {self.algebra['regular_double_stone']}")
        lines.append("conditions")
        for name, c in self.conditions.items():
            suffix = f"  witness {c['witness']}" if c["witness"] and not c["holds"] else ""
            lines.append(f"  {name:<8} {c['holds']}{suffix}")
        if self.isomorphism_checked:
            lines.append("isomorphic to chain product: " + (", ".join(self.isomorphic_to) or "none"))
        else:
            lines.append("isomorphism against chain products skipped (size above cap)")
        return "\n".join(lines) + "\n"


def analyze(R: BinaryRelation, *, max_elements: int | None = None, zero_based: bool = False,
            system: RoughSetSystem | None = None) -> AnalysisReport:
    """Run the full pipeline on one reflexive relation."""
    if max_elements is None:
        max_elements = max_elements_from_env()
    if not R.is_reflexive():
        raise RelationError("input relation is not reflexive")
    S = system or RoughSetSystem(R)
    if len(S) > max_elements:
        raise ResourceCapError(f"DM(RS) has {len(S)} elements, above the cap of {max_elements}")
    labels = _label_table(R, zero_based)
    n = R.n
    fams = {}
    for kind in KINDS:
        F = getattr(S, kind)
        irr = family_irreducibles(F)
        fams[kind] = {
            "size": len(F),
            "atoms": [format_subset(a, labels, n) for a in irr.atoms],
            "join_irreducibles": [format_subset(j, labels, n) for j in irr.join_irreducibles],
            "distributive": irr.is_distributive,
            "boolean": irr.is_boolean,
        }
    L = S.lattice
    rep = L.classify()
    algebra = rep.as_dict()
    algebra["regular_double_stone"] = rep.regular_double_stone
    algebra["witnesses"] = {k: _format_algebra_witness(v, S.pairs, labels, n) for k, v in rep.witnesses.items()}
    algebra["center"] = [format_pair(S.pairs[i], labels, n) for i in rep.center]
    algebra["skeleton"] = [format_pair(S.pairs[i], labels, n) for i in rep.skeleton]
    conds = {name: {"holds": c.holds, "witness": format_witness(c.witness, labels, n), "provenance": c.provenance}
             for name, c in cond.all_conditions(R).items()}
    checked = len(L) <= DEFAULT_ISO_CAP
    hits = isomorphism_hits(L) if checked else []
    provenance = {"algebra": "exhaustive", "conditions": "exhaustive",
                  "isomorphism": "exhaustive" if checked else "skipped"}
    return AnalysisReport(
        relation=relation_to_dict(R),
        relation_flags=classify_relation(R).as_dict(),
        families=fams,
        rs_size=len(S.rs),
        dm_size=len(S),
        rs_equals_dm=S.rs_equals_dmrs,
        algebra=algebra,
        conditions=conds,
        isomorphic_to=hits,
        isomorphism_checked=checked,
        provenance=provenance,
    )


def max_elements_from_env(default: int = DEFAULT_MAX_ELEMENTS) -> int:
    raw = os.environ.get(ENV_MAX_ELEMENTS)
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{ENV_MAX_ELEMENTS} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{ENV_MAX_ELEMENTS} must be positive")
    return value


# -- commands -----------------------------------------------------------------------------


def cmd_analyze(args) -> int:
    R = read_relation(args.input)
    max_el = args.max_elements if args.max_elements is not None else max_elements_from_env()
    if not R.is_reflexive():
        raise RelationError("input relation is not reflexive")
    S = RoughSetSystem(R)
    report = analyze(R, max_elements=max_el, zero_based=args.zero_based, system=S)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(hasse_dot(S, zero_based=args.zero_based))
    sys.stdout.write(report.to_json() + "\n" if args.format == "json" else report.to_text())
    return EXIT_OK


def cmd_verify(args) -> int:
    base: dict[str, Any] = {}
    if args.config:
        with open(args.config, encoding="utf-8") as fh:
            base = json.load(fh)
    for key in ("n_min", "n_max", "samples", "seed", "jobs"):
        value = getattr(args, key)
        if value is not None:
            base[key] = value
    if args.theorem is not None:
        base["theorems"] = args.theorem.split(",") if args.theorem != "all" else ["all"]
    if args.classes is not None:
        base["classes"] = args.classes.split(",")
    cfg = CampaignConfig.from_dict(base)
    result = run_campaign(cfg)
    text = result.to_json()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    sys.stdout.write(text + "\n")
    sys.stderr.write(f"result digest {result.digest()}\n")
    return EXIT_OK if result.ok else EXIT_FAILURE


def cmd_generate(args) -> int:
    kind = args.kind
    params: dict[str, Any] = {}
    if args.beta is not None:
        params["beta"] = args.beta
    if args.density is not None:
        params["density"] = args.density
    if args.blocks is not None:
        params["blocks"] = json.loads(args.blocks)
        params["one_based"] = True
    if args.assignment is not None:
        params["assignment"] = json.loads(args.assignment)
    R = generate(kind, args.size, args.seed, **params)
    text = json.dumps(relation_to_dict(R), ensure_ascii=False)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="roughdm", description="Rough-set lattices of reflexive relations.")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="analyse a relation given as JSON")
    a.add_argument("input", help="relation JSON file")
    a.add_argument("--dot", metavar="PATH", help="write the Hasse diagram of DM(RS) as DOT")
    a.add_argument("--format", choices=("json", "text"), default="text")
    a.add_argument("--max-elements", type=int, metavar="N", help=f"cap on |DM(RS)| (env {ENV_MAX_ELEMENTS})")
    a.add_argument("--zero-based", action="store_true", help="label elements from 0 instead of 1")
    a.set_defaults(func=cmd_analyze)

    v = sub.add_parser("verify", help="run a theorem verification campaign")
    v.add_argument("--theorem", metavar="LIST", help="comma-separated ids T1..T10 or 'all'")
    v.add_argument("--n-min", type=int)
    v.add_argument("--n-max", type=int)
    v.add_argument("--samples", type=int, help="sampled relations per size above 3")
    v.add_argument("--seed", type=int)
    v.add_argument("--jobs", type=int)
    v.add_argument("--classes", metavar="LIST", help="relation classes used for sampling")
    v.add_argument("--config", metavar="PATH", help="campaign config JSON; flags override it")
    v.add_argument("--out", metavar="PATH", help="also write the result JSON here")
    v.set_defaults(func=cmd_verify)

    g = sub.add_parser("generate", help="generate a relation JSON")
    g.add_argument("--kind", required=True,
                   help="identity, full, random-reflexive, random-quasiorder, tolerance, equivalence, "
                        "clinker or information-system")
    g.add_argument("--size", type=int)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out", metavar="PATH")
    g.add_argument("--beta", type=float, help="misclassification threshold for information-system")
    g.add_argument("--density", type=float)
    g.add_argument("--blocks", help="covering blocks as JSON, 1-based, e.g. [[1,2],[1,3]]")
    g.add_argument("--assignment", help="clinker block index per element as JSON list")
    g.set_defaults(func=cmd_generate)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (RelationParseError, RelationError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
