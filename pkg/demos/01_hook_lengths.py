"""
Hook lengths of a self-conjugate partition
==========================================

A self-conjugate partition is determined by its diagonal hooks, which form
a partition into distinct odd parts. Every other hook can be read off
those parts without drawing the diagram.
"""

from corekit import (
    distinct_odd_to_sc,
    hook_length_formula,
    hook_table,
    is_t_core_naive,
    is_t_core_sc,
    make_distinct_odd,
    sc_to_distinct_odd,
)

# Start from the distinct-odd partition and fold each part into a hook
lam = make_distinct_odd([13, 7, 3, 1])
gamma = distinct_odd_to_sc(lam)
print("gamma =", gamma)
print(hook_table(gamma).render())

# Going back: the diagonal hooks recover lam
print("diagonal hooks:", sc_to_distinct_odd(gamma))

# The same hooks from the parts alone, for the boxes on or below the diagonal
for (i, j), h in hook_table(gamma).boxes():
    if i >= j:
        assert hook_length_formula(lam, i, j) == h
print("formula agrees with the diagram on every box")

# t-core checks: none of the hooks is a multiple of 6, but 7 appears
for t in (6, 7):
    print(f"t={t}:", is_t_core_sc(lam, t), "| naive:", is_t_core_naive(gamma, t))
