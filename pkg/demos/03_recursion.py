"""
Block recursion for three-row shapes
====================================

Fillings of a shape with at most three rows split by column type.  Each
block sum has a closed form, and adding the blocks gives g_lam.
"""

from deltapos.delta_core import g_coefficient
from deltapos.qt_algebra import eval_rational
from deltapos.recursion import (
    ThreePartShape,
    check_rank,
    g_00k_closed,
    g_00k_terms,
    g_a0k_closed,
    g_block_bruteforce,
    g_via_recursion,
    recursion_terms,
)

# the one-row block as a sum of (qt)^s [lo -> hi]
for s, lo, hi in g_00k_terms(12):
    print(f"(qt)^{s} [{lo} -> {hi}]")
assert g_00k_closed(12) == g_block_bruteforce(0, 0, 12)

# adding full columns shifts and extends the ranges
print("g[1,0,2] =", g_a0k_closed(1, 2))

# lam = (3, 2, 2, 1, 1) is (3^1 2^2 1^2)
shape = ThreePartShape(1, 2, 2)
print("blocks:", recursion_terms(shape))
g = g_via_recursion(shape)
assert g == g_coefficient(shape.partition())
print("value at q = t = 1:", eval_rational(g, 1, 1))

# at t = 1/q the single column matches a product of q-binomials
print("rank formula holds for n = 8:", check_rank(8, [2, 3]))
