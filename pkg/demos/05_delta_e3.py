"""
Probing Delta_{e_3}
===================

The next operator in the family has a five-term formula.  We clear its
common denominator exactly and look at positivity shape by shape.
"""

from deltapos.delta_e3 import delta3_coefficient, delta3_via_F_samplecheck, positivity_report
from deltapos.shapes import partitions

# for n = 3 the coefficient of s_(1,1,1) is the q,t-Catalan number
print(delta3_coefficient((1, 1, 1)))

for n in range(4, 8):
    reports = [positivity_report(lam) for lam in partitions(n)]
    bad = [r.lam for r in reports if r.status != "PASS"]
    print(f"n={n}: {len(reports)} shapes, all nonnegative and symmetric: {not bad}")

# the partial-fraction form agrees at exact rational points
print(delta3_via_F_samplecheck((2, 2, 1), [(2, 3), ("3/7", "5/2")]))
