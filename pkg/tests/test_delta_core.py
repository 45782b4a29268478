import json

import pytest
from hypothesis import given, strategies as st

from deltapos.delta_core import (
    Certificate,
    delta_e1_closed,
    delta_e1_coefficient,
    extract_certificate,
    f_poly,
    f_poly_tableau,
    g_coefficient,
    g_raw_quotient,
    reconstruct,
)
from deltapos.qt_algebra import ONE, ZERO, q, qt_analog as A, t
from deltapos.shapes import partitions

QT = q * t

G_1111 = A(2) + A(3) + 2 * A(4) + A(5) + A(6) + QT * (1 + A(2) + A(3))
G_211 = A(1) + 2 * A(2) + 3 * A(3) + 2 * A(4) + A(5) + QT * (1 + A(2))

UP_TO_10 = [lam for n in range(11) for lam in partitions(n)]


def test_f_examples():
    assert f_poly((1, 1)) == 1 + q + t + t * t
    assert f_poly((4,)) == ZERO
    assert f_poly((1,)) == ONE
    assert f_poly_tableau((1, 1)) == 1 + q + t + t * t
    assert f_poly_tableau((1,)) == ONE
    assert f_poly_tableau((4,)) == ZERO


def test_g_golden_values():
    assert g_coefficient((1, 1)) == q + t
    assert g_coefficient((1, 1, 1, 1)) == G_1111
    assert g_coefficient((2, 1, 1)) == G_211
    assert g_raw_quotient((1, 1)) == q + t
    assert g_raw_quotient((1, 1, 1, 1)) == G_1111
    assert g_raw_quotient((5,)) == ZERO


def test_delta_e1_examples():
    assert delta_e1_coefficient((1, 1)) == 1 + q + t
    assert delta_e1_coefficient((1,)) == ONE
    assert delta_e1_coefficient((2,)) == ONE
    assert delta_e1_closed((1, 1)) == 1 + q + t
    assert delta_e1_closed((3,)) == ZERO
    assert delta_e1_closed((2, 1)) == 1 + q + t == delta_e1_coefficient((2, 1))


def test_certificate_examples():
    cert = extract_certificate(f_poly((1, 1)))
    assert cert.entries == ((0, 2, 1),)
    assert reconstruct(cert) == q + t
    assert extract_certificate(ZERO).entries == ()
    cert = extract_certificate(f_poly((1, 1, 1, 1)))
    assert cert.positive and reconstruct(cert) == G_1111
    assert str(cert) == "[2]+[3]+2[4]+[5]+[6]+qt(1+[2]+[3])"


def test_reconstruct_examples():
    assert reconstruct([(0, 2, 1)]) == q + t
    assert reconstruct([]) == ZERO
    assert reconstruct([(1, 1, 1), (0, 3, 2)]) == QT + 2 * (q * q + q * t + t * t)


def test_certificate_validation_and_json():
    with pytest.raises(ValueError):
        Certificate(((0, 0, 1),))
    with pytest.raises(ValueError):
        Certificate(((1, 2, 1), (0, 2, 1)))
    cert = extract_certificate(f_poly((2, 2, 1, 1)))
    data = json.loads(cert.to_json())
    assert Certificate.from_dict(data) == cert
    assert data["positive"] is True
    assert not Certificate(((0, 2, -1),)).positive


@pytest.mark.parametrize("lam", UP_TO_10, ids=str)
def test_core_invariants(lam):
    f = f_poly(lam)
    g = g_coefficient(lam)
    assert f == f_poly_tableau(lam)
    assert f.is_nonnegative()
    assert g == g_raw_quotient(lam)
    assert g.tau() == g
    cert = extract_certificate(f)
    assert cert.positive
    assert reconstruct(cert) == g
    assert delta_e1_coefficient(lam) == delta_e1_closed(lam)
    if lam and lam[0] >= 4:
        assert g == ZERO


@given(st.integers(1, 7))
def test_single_column_is_nonzero(n):
    # g_{(1^n)} counts tableaux on a column of three rows, nonzero for n >= 2
    assert bool(g_coefficient((1,) * n)) == (n >= 2)
