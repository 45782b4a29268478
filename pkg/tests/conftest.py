from hypothesis import strategies as st

from deltapos.qt_algebra import QtPoly


def qt_polys(max_exp: int = 5, max_terms: int = 6, max_coeff: int = 20):
    """Random sparse polynomials with small exponents."""
    exps = st.tuples(st.integers(0, max_exp), st.integers(0, max_exp))
    coeffs = st.integers(-max_coeff, max_coeff)
    return st.dictionaries(exps, coeffs, max_size=max_terms).map(QtPoly)
