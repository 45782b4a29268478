"""
Enriched tableaux and leftovers
===============================

Decorating the 2's of fillings over {0, 1, 2} turns F into a weighted count.
Tableaux pair off across the diagonal; the unpaired ones, the leftovers,
give the positive expansion directly.
"""

from deltapos.delta_core import g_coefficient
from deltapos.enriched import (
    check_injection,
    enumerate_enriched,
    g_via_leftovers,
    leftover_counts,
    leftovers,
    weight_class,
    weight_counts,
)
from deltapos.shapes import conjugate

lam = (1, 1, 1, 1, 1)
shape = conjugate(lam)
tabs = list(enumerate_enriched(shape))
print(f"{len(tabs)} enriched tableaux of shape {tuple(shape)}")

# a few of them, with their weight classes (t exponent, q exponent)
for tab in tabs[-4:]:
    print(tab, " ->", weight_class(tab))
    print()

# counts per class, and the leftover count that balances each t-heavy class
counts = weight_counts(shape)
left = leftover_counts(shape)
for cls in sorted(counts, key=lambda c: (c.t_exp, c.q_exp)):
    if cls.t_exp > cls.q_exp:
        print(f"t^{cls.t_exp} q^{cls.q_exp}: {counts[cls]:3d} tableaux, {left.get(cls, 0):3d} leftovers")

# the leftovers alone rebuild g
print("leftovers:", sum(1 for _ in leftovers(shape)))
assert g_via_leftovers(lam) == g_coefficient(lam)

# the explicit injection from q-heavy into t-heavy classes
print(check_injection(shape))
