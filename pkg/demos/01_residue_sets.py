#!/usr/bin/env python3
"""Power residue sets R_m(p): membership, cardinality, and the sum law.

R_m(p) collects the m-th power residues among 1..p-1.  When 2m divides p-1
it is a subgroup of index m that is symmetric about p/2, and its element sum
is exactly p(p-1)/(2m).
"""

from resitan import is_mth_residue, residue_set, residue_sum_check

print("R_3(13):", residue_set(13, 3).members)
print("R_3(31):", residue_set(31, 3).members)
print()

for p, m in [(13, 3), (31, 3), (31, 5), (113, 4), (5, 1)]:
    rs = residue_set(p, m)
    total = sum(rs.members)
    law = p * (p - 1) // (2 * m)
    print(f"p={p:4d} m={m}:  |R| = {len(rs.members):3d} = (p-1)/m,  "
          f"sum = {total:5d},  p(p-1)/(2m) = {law:5d},  "
          f"sum law holds: {residue_sum_check(p, m)}")

print()
print("is 2 an m-th power residue?")
for p, m in [(31, 3), (13, 3), (113, 4), (7, 1)]:
    print(f"  2 in R_{m}({p}): {is_mth_residue(2, p, m)}")

print()
print("symmetry: k is in R_m(p) exactly when p - k is")
members = set(residue_set(31, 3).members)
print("  R_3(31) reflected:", sorted(31 - k for k in members) == sorted(members))
