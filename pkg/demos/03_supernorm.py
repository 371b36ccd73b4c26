"""
Supernorms of partitions
========================

The supernorm sends a partition to the integer whose prime factors are
indexed by its parts. Distinct-odd partitions land on squarefree integers
with odd prime indices, so the self-conjugate t-cores of n pick out a
finite set of integers.
"""

from corekit import (
    euler_count_pair,
    make_partition,
    sc7_bkm,
    supernorm,
    supernorm_inverse,
    t_core_supernorm_set,
    two_core_supernorm_pair,
)

p = make_partition([6, 5, 3, 3, 2, 1, 1, 1])
image = supernorm(p)
print(p, "->", image.value, image.factor_indices)
print(image.value, "->", supernorm_inverse(image.value))

# Distinct parts versus odd parts, counted through their supernorms
print("Euler pairs:", [euler_count_pair(n) for n in range(1, 11)])

# 2-cores: primorials against products of primes with indices 1 or 3 mod 4
print("2-core pairs:", [two_core_supernorm_pair(k) for k in range(1, 7)])

# 7-cores: the set size is a class-number combination
for n in (9, 16, 24, 40):
    values = t_core_supernorm_set(n, 7)
    print(f"n={n}: {len(values)} integers (formula {sc7_bkm(n)}):", values)
