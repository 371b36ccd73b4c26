"""
Counting self-conjugate t-cores
===============================

Brute-force counts of self-conjugate t-cores next to the closed forms for
t = 2 and 3 and the Hurwitz class-number formulas for t = 7.
"""

from corekit import hurwitz, sc2_count, sc3_count, sc7_bkm, sc7_ono_raji
from corekit.enumeration import sc_t_counts_bruteforce

N = 60

brute = {t: sc_t_counts_bruteforce(N, t) for t in (2, 3, 7)}

print(" n  sc2 (brute/formula)  sc3 (brute/formula)  sc7 (brute/four-term/single-term)")
for n in range(1, N + 1):
    single = sc7_ono_raji(n) if n % 2 and n % 7 != 5 else "NA"
    print(f"{n:2d}  {brute[2][n]}/{sc2_count(n)}"
          f"                  {brute[3][n]}/{sc3_count(n)}"
          f"                  {brute[7][n]}/{sc7_bkm(n)}/{single}")

# Class numbers are exact rationals; non-integral arguments give zero
print("H(-3) =", hurwitz(-3), " H(-4) =", hurwitz(-4), " H(-84) =", hurwitz(-84))
