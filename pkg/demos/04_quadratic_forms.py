#!/usr/bin/env python3
"""Quadratic-form representations and what they say about residues of 2.

Cornacchia's descent solves p = x^2 + d*y^2 exactly.  For d = 27 the pair
(x, y) pins the sign jacobi(-2, p) = (-1)^(xy/2); whether p is representable
at all decides whether 2 is a cubic (d = 27) or quartic (d = 64) residue,
and the corollary-level products evaluate to explicit signed powers of 2.
"""

from resitan import (check_lemma31, cornacchia, jacobi, two_residue_criterion,
                     verify_cor11, verify_cor12)

print("representations found by the Euclidean descent:")
for p, d in [(31, 27), (43, 27), (113, 64), (337, 64), (13, 27), (17, 64)]:
    rep = cornacchia(p, d)
    if rep is None:
        print(f"  {p:4d} = x^2 + {d}*y^2: none")
    else:
        print(f"  {p:4d} = {rep.x}^2 + {d}*{rep.y}^2")

print()
print("sign law for p = x^2 + 27*y^2:")
for p in [31, 43, 109, 127]:
    rep = cornacchia(p, 27)
    rec = check_lemma31(p)
    print(f"  p={p:4d} (x={rep.x}, y={rep.y}):  jacobi(-2,p) = {jacobi(-2, p):+d}"
          f"  = (-1)^(xy/2): {rec.status}")

print()
print("2 is an m-th power residue iff p = x^2 + m*(m*y)^2:")
for p, m in [(31, 3), (13, 3), (113, 4), (73, 4)]:
    rec = two_residue_criterion(p, m)
    print(f"  p={p:4d} m={m}: {rec.status}  [{rec.actual}]")

print()
print("corollary-level exact product values:")
for p in [31, 43]:
    rec = verify_cor11(p)
    print(f"  p={p:4d} = x^2+27y^2:  prod over R_3 = {rec.expected}  ({rec.status})")
for p in [113, 337]:
    rec = verify_cor12(p)
    print(f"  p={p:4d} = x^2+64y^2:  prod over R_4 = {rec.expected}  ({rec.status})")
