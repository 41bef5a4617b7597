"""A verification campaign over generated relations, and witness minimization
against a deliberately broken check.

Run: python3 demos/05_campaign.py
"""

import json

from roughdm import catalog
from roughdm.verify import THEOREMS, TheoremCase, minimize_witness, run_campaign

result = run_campaign(n_min=1, n_max=5, samples=100, seed=3)
print(f"{result.cases} relations, ok = {result.ok}, {result.elapsed:.1f}s")
for tid, counts in result.as_dict()["counts"].items():
    print(f"  {tid:<4} {THEOREMS[tid].statement[:70]:<70} {counts['passed']}/{counts['evaluated']}")
print("quasiorder conjecture tallies:", json.dumps(result.as_dict()["quasiorder_st1_conjecture"]))
print("digest:", result.digest())

# a wrong clinker test that only accepts universes with fewer than three points
broken = TheoremCase(
    "T4", "deliberately broken", lambda i: True,
    {"rSt": lambda i: i.conditions["rSt"].holds,
     "clinker": lambda i: i.conditions["clinker"].holds and i.R.n < 3},
)
small = minimize_witness(catalog.TWO_BY_TWO_BY_THREE, broken)
print("\nminimized witness for the broken check:", small)
