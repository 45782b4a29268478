"""
The seven-term generating function
==================================

Summing F over all three-row shapes gives a rational function in u1, u2, u3.
Seven pieces, each a monomial numerator over a product of (m - 1) factors,
expand as geometric series with visibly nonnegative, t-heavy coefficients.
"""

from deltapos.delta_core import g_coefficient
from deltapos.genfun import SEVEN_TERMS, build_F, check_F_properties, g_via_genfun
from deltapos.shapes import three_part_shape

bound = 5
F = build_F(bound)
print(check_F_properties(bound, F))

# the coefficient of u1^2 u2 is the t-heavy part of F for lam' = (3, 1)
print("F[2,1,0] =", F[(2, 1, 0)])

# antisymmetrizing any coefficient gives back g
a, b, c = 1, 2, 1
g = g_via_genfun(a, b, c, bound, F)
print(f"g_(3^{c} 2^{b} 1^{a}) =", g)
assert g == g_coefficient(three_part_shape(c, b, a))

# each piece evaluates exactly at a rational point
for k, term in enumerate(SEVEN_TERMS, 1):
    print(k, term.evaluate("1/3", "1/5", "1/7", 2, 4))
