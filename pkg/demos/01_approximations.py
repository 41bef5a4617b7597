"""Approximation operators on a four-point relation and the laws they satisfy.

Run: python3 demos/01_approximations.py
"""

from roughdm import catalog
from roughdm.approx import Approximations, law_suite
from roughdm.relation import classify_relation, format_subset, inverse, mask_of

R = catalog.DISTRIBUTIVE_TEN
print("relation:", R)
print("inverse neighbourhoods {x}▲:", [format_subset(s) for s in inverse(R).succ])
print("properties:", classify_relation(R).as_dict())

ap = Approximations(R)
X = mask_of([1, 2, 3])  # {2,3,4} in 1-based notation
print(f"\nX = {format_subset(X)}")
for mode in ("lower", "upper", "lower_inv", "upper_inv"):
    print(f"  {mode:<10} {format_subset(ap(X, mode))}")
# only element 3 survives in the lower approximation: R(4) = {1,3,4} leaves X

report = law_suite(R)
print("\nlaw suite over all", report.sample_size, "subsets:", "ok" if report.ok else report.violations)
for law, n in sorted(report.checks.items()):
    print(f"  {law:<7} checked {n} times")
