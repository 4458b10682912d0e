"""Tour of the rank-1 growth series and its asymptotic envelopes.

Counts subgroups of the rationals by commensurability index against the
integers: exactly 2**omega(n) subgroups sit at index n, so the running
total C_n is squeezed between n*(log n)**log(2) and n*log(n) envelopes.
"""

import math

from commgrowth import (check_sandwich_bounds, dirichlet_residual,
                        growth_series_rank1, omega_sum_ratio, sum_divisor_count,
                        sum_omega)

print("=== the exact series ===")
series = growth_series_rank1(30)
print(" k  c_k  C_k")
for k, (ck, Ck) in enumerate(zip(series.c, series.C), 1):
    print(f"{k:>2} {ck:>4} {Ck:>4}")

print()
print("c_k jumps exactly at squarefree-rich k: c_30 =", series.c[29],
      "because 30 = 2*3*5 has three prime factors")

print()
print("=== summatory behavior ===")
for n in (10, 100, 1000, 10 ** 4, 10 ** 5):
    print(f"n={n:>6}: sum omega = {sum_omega(n):>7}, "
          f"sum d(k) = {sum_divisor_count(n):>8}, "
          f"divisor residual / sqrt(n) = {dirichlet_residual(n) / math.sqrt(n):+.3f}")

print()
print("the omega summatory ratio drifts toward its limiting constant:")
for n in (10 ** 3, 10 ** 4, 10 ** 5):
    print(f"  n={n:>6}: (sum omega - n log log n)/n = {omega_sum_ratio(n):.4f}")

print()
print("=== sandwich envelopes ===")
big = growth_series_rank1(10 ** 5)
report = check_sandwich_bounds(big, 100)
print("exact chain k <= C_k <= sum d(j) holds:", report.holds)
print(f"max C_k/(k log k)            = {report.context['upper_ratio_max']:.4f}")
print(f"min C_k/(k (log k)**log 2)   = {report.context['lower_ratio_min']:.4f}")
print("the upper ratio settles near 6/pi^2 =", f"{6 / math.pi ** 2:.4f}")
