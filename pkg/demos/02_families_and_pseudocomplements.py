"""The families of upper and lower approximations as lattices, and pseudocomplements
computed from cores of neighbourhoods compared with a brute-force scan.

Run: python3 demos/02_families_and_pseudocomplements.py
"""

from roughdm import catalog
from roughdm.families import brute_pseudocomplement, build_family, family_irreducibles, kernel_K, upper_pseudocomplement
from roughdm.relation import format_subset, mask_of

R = catalog.DISTRIBUTIVE_TEN
for kind in ("upper", "lower", "upper_inv", "lower_inv"):
    F = build_family(R, kind)
    irr = family_irreducibles(F)
    print(f"{kind:<10} {len(F):>2} members: {' '.join(format_subset(X) for X in F.members)}")
    print(f"{'':<10} atoms {[format_subset(a) for a in irr.atoms]}  Boolean: {irr.is_boolean}")

F = build_family(R, "upper")
B = mask_of([1, 2, 3])
print(f"\nB = {format_subset(B)}")
print("  union of inverse cores below B:", format_subset(kernel_K(R, B, F)))
print("  pseudocomplement from cores:   ", format_subset(upper_pseudocomplement(R, B, F)))
print("  pseudocomplement by scanning:  ", format_subset(brute_pseudocomplement(F, B)))
