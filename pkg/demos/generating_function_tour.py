"""Tour of the series engine: the restricted partition count, its
eta-quotient generating function, and the triple-product identities.

Run:  python3 demos/generating_function_tour.py
"""

from eopart import eobar_count_enum, eobar_series, eo_count
from eopart.partitions import partitions_desc, _is_eobar
from eopart.series import eta_factor, mul, power, theta

# The count of partitions where every even part is below every odd part,
# restricted so that only the largest even part occurs an odd number of
# times.  At n = 8 there are exactly five:
print("restricted partitions of 8:")
for p in partitions_desc(8):
    if _is_eobar(p):
        print("  ", " + ".join(map(str, p)))
print("count:", eobar_count_enum(8), " (plain even-below-odd count:", eo_count(8), ")")

# The same numbers fall out of the eta quotient J_4^3 / J_2^2.
s = eobar_series(20)
print("\nseries coefficients 0..20:", s.coeffs)
print("enumeration agrees:", all(s.c(n) == eobar_count_enum(n) for n in range(21)))

# Jacobi triple product specializations, checked coefficientwise: the
# alternating square theta is J_1^2/J_2, and the alternating pentagonal
# theta collapses to J_1 itself.
N = 100
j1, j2 = eta_factor(1, N), eta_factor(2, N)
print("\ntheta(square_alt) * J_2 == J_1^2:",
      mul(theta("square_alt", N), j2) == power(j1, 2))
print("theta(pent3_alt) == J_1:", theta("pent3_alt", N) == j1)
