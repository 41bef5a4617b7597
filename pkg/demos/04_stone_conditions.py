"""Relation-level conditions that predict Stone and regular double Stone completions,
and the generator that builds relations satisfying them from an irredundant covering.

Run: python3 demos/04_stone_conditions.py
"""

from roughdm import catalog
from roughdm.cli_io import format_pair, format_witness
from roughdm.conditions import all_conditions
from roughdm.latticecore import classify
from roughdm.relation import format_subset, generate, inverse
from roughdm.roughlattice import build_dmrs

for name, R in catalog.NAMED.items():
    conds = all_conditions(R)
    rep = classify(build_dmrs(R).lattice)
    summary = ", ".join(f"{k}={'yes' if c.holds else 'no'}" for k, c in conds.items())
    print(f"{name}: {summary}")
    print(f"   Stone={rep['stone']}  regular double Stone={rep.regular_double_stone}")
    for k, c in conds.items():
        if not c.holds:
            print(f"   {k} witness: {format_witness(c.witness, R.label_list(), R.n)}")

print("\nrelations generated from random irredundant coverings:")
for seed in range(4):
    R = generate("clinker", 5, seed=seed)
    S = build_dmrs(R)
    blocks = sorted({format_subset(b) for b in inverse(R).succ})
    rep = classify(S.lattice)
    print(f"  seed {seed}: blocks {blocks} -> |DM(RS)| = {len(S)}, regular double Stone {rep.regular_double_stone}")

# a fixed point of the g map in the three-point example
S = build_dmrs(catalog.TWO_BY_THREE)
g = S.g_map_and_partition()
print("\nJ partition of the three-point example:")
for label, part in (("J-", g.jminus), ("J0", g.jzero), ("J+", g.jplus)):
    print(f"  {label}: {[format_pair(S.pairs[j], None, S.n) for j in part]}")
