#!/usr/bin/env python3
"""Floating tangent products in sign/log2 form, against their exact values.

prod over k in R_m(p) of (1 + tan(pi*a*k/p)) equals a signed power of 2
whenever 2 is an m-th power residue mod p.  The product is accumulated as
(sign, log2 of magnitude) so nothing overflows even at magnitude 2^((p-1)/2);
the value is independent of a, which the last block samples directly.
"""

from resitan import tan_product, verify_theorem_main_numeric

for p, m in [(5, 1), (31, 3), (113, 4), (1999, 1)]:
    sm = tan_product(p, m, 1)
    print(f"p={p:5d} m={m}:  sign {sm.sign:+d},  log2|prod| = {sm.log2_mag:14.9f}"
          f"   (target exponent (p-1)/(2m) = {(p - 1) // (2 * m)})")

print()
print("pinned against the predicted sign * 2^((p-1)/(2m)) at rel_tol 1e-6:")
for p, m, a in [(5, 1, 1), (31, 3, 1), (31, 3, 30), (113, 4, 2), (1999, 1, 1998)]:
    rec = verify_theorem_main_numeric(p, m, a, rel_tol=1e-6)
    print(f"  (p={p}, m={m}, a={a}): {rec.status}  expected {rec.expected}")

print()
print("the same value for every a (here p=31, m=3):")
seen = {tan_product(31, 3, a).sign * round(tan_product(31, 3, a).log2_mag, 6)
        for a in range(1, 31)}
print(f"  distinct (sign * log2) over a = 1..30: {seen}")
