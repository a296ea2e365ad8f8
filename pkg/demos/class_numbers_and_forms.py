"""Ternary representation numbers, reduced binary forms, and the class
number bridge r113(n) = 2 h(-3n) — plus the mod-8 surprise at p = 17.

Run:  python3 demos/class_numbers_and_forms.py
"""

from eopart import class_number, classify_mod4, r113, r133, reduced_forms
from eopart.quadforms import A_direct

# The bridge: for squarefree n = 2 mod 12 the representation count by
# x^2+y^2+3z^2 is twice an imaginary-quadratic class number.
print("n   r113(n)  r133(3n)  2h(-3n)")
for n in (2, 14, 26, 38, 62, 86):
    print(f"{n:<4}{r113(n):<9}{r133(3 * n):<10}{2 * class_number(3 * n)}")

print("\nreduced forms of discriminant -168 (h(-42) = 4):")
for f in reduced_forms(-168):
    print(f"  {f.a}x^2 + {f.b}xy + {f.c}y^2")

# Residues of A(n) mod 4 are decided by the shape of n/2.
print("\nA(n) mod 4 classification:")
for n in (2, 14, 170, 2 * 7**5):
    cert = classify_mod4(n)
    print(f"  n={n}: {cert.cls.value:14} witness={cert.witness}  A(n)={A_direct(n)}")

# The quoted h(-6p) mod 8 dichotomy holds for p = 1 mod 6 but breaks at
# p = 17 (h(-102) = 4, not 0 mod 8): the source statement needs that
# hypothesis, which is automatic in the classification proof.
print("\nh(-6p) mod 8 (predicted 4 when p = 5,7 mod 8, else 0):")
for p in (5, 7, 13, 17, 19, 23):
    h = class_number(6 * p)
    want = 4 if p % 8 in (5, 7) else 0
    tag = "ok" if h % 8 == want else f"BREAKS (p = {p % 6} mod 6)"
    print(f"  p={p:<3} h={h:<3} mod 8 = {h % 8}  predicted {want}  {tag}")
