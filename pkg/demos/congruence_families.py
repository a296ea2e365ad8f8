"""Ramanujan-type congruences mod 4: build families from the prime
parameterization, check them against the series, and rediscover them by
blind scanning.

Run:  python3 demos/congruence_families.py
"""

from eopart import check_family, family_from_theorem, scan_congruences
from eopart.verify import CongruenceFamily

# One-prime families for p = 5: four residues mod 25.
print("families from p = 5:")
for j in range(1, 5):
    fam = family_from_theorem([5], j)
    rep = check_family(fam, 400)
    print(f"  count(25n+{fam.residue_B:2d}) = 0 mod 4  j={j}  -> {rep.passed}")

# p = 7 sits in the 7 mod 24 class, so only j with (3j/7) = -1 qualify.
print("\nfamilies from p = 7:")
for j in range(1, 7):
    try:
        fam = family_from_theorem([7], j)
    except ValueError as exc:
        print(f"  j={j}: rejected ({exc})")
        continue
    print(f"  count(49n+{fam.residue_B}) = 0 mod 4  j={j}  -> {check_family(fam, 200).passed}")

# A two-prime family, and a deliberately wrong residue.
fam = family_from_theorem([5, 7], 1)
print(f"\ntwo primes: A={fam.modulus_A}, B={fam.residue_B} ->",
      check_family(fam, 40).passed)
bad = check_family(CongruenceFamily(25, 1), 100)
print("residue 1 mod 25 fails at:", bad.counterexample)

# Blind scan: every residue class that vanishes mod 4 up to the bound.
print("\nscan A <= 25, n <= 400 (nontrivial families):")
for fam in scan_congruences(25, 400):
    if not fam.trivial:
        print(f"  ({fam.modulus_A}, {fam.residue_B})")
