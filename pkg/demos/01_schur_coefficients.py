"""
Schur coefficients of Delta_{e_2} e_n
=====================================

The coefficient g_lam of s_lam is a polynomial in q and t.  We compute it
from three Schur specializations and read off a certificate that writes it
as a nonnegative sum of shifted q,t-analogs.
"""

from deltapos.delta_core import extract_certificate, f_poly, g_coefficient, g_raw_quotient
from deltapos.qt_algebra import eval_rational
from deltapos.shapes import partitions

# the single column of height four
lam = (1, 1, 1, 1)
g = g_coefficient(lam)
print("g_(1^4) =", g)

# the raw three-term quotient gives the same polynomial
assert g_raw_quotient(lam) == g

# F is supported on both sides of the diagonal; the certificate pairs them off
cert = extract_certificate(f_poly(lam))
print("as analogs:", cert)
print("positive:", cert.positive)

# at q = t = 1 the coefficients count something: 2 * C(6, 4) = 30
print("g_(1^4)(1, 1) =", eval_rational(g, 1, 1))

# a shape wider than three columns has no contribution
print("g_(4) =", g_coefficient((4,)))

# every shape of 7 with its certificate
for lam in partitions(7, 3):
    print(f"{str(tuple(lam)):24} {extract_certificate(f_poly(lam))}")
