"""Almost all values of the restricted partition count are divisible by 4:
watch the density climb toward 1 across checkpoints.

Run:  python3 demos/density_of_divisibility.py
"""

from eopart import density_report, gamma_count

rows = density_report([10_000, 100_000, 1_000_000])
print(f"{'N':>9}  {'odd':>6}  {'=2 mod 4':>9}  {'=0 mod 4':>9}  ratio")
for r in rows:
    print(
        f"{r['N']:>9}  {r['odd']:>6}  {r['two_mod4']:>9}  {r['zero_mod4']:>9}"
        f"  {r['ratio_zero_mod4']:.6f}"
    )
print("\nodd counts stay below sqrt(6N+1):",
      all(r["bound_ok"] for r in rows))

# The 2-mod-4 class is governed by arguments of the form m^2 p^{4a+1}; the
# asymptotic reference converges only slowly, so it is reported, never
# asserted.
count, predicted = gamma_count(6, 1, 50_000)
print(f"\ngamma count for 6n+1, N=50000: observed {count}, "
      f"asymptotic reference {predicted:.0f}")
