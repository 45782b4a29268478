from fractions import Fraction

import pytest

from deltapos.delta_core import delta_e1_coefficient, g_coefficient
from deltapos.delta_e3 import (
    WrongSize,
    b_alphabet,
    delta3_coefficient,
    delta3_F_formula,
    delta3_via_F_samplecheck,
    positivity_report,
)
from deltapos.qt_algebra import ZERO, InvalidSample, eval_rational, q, t
from deltapos.shapes import partitions

SAMPLES = [(2, 3), (5, 2), (Fraction(3, 7), Fraction(5, 2))]


def test_b_alphabet():
    assert sorted(b_alphabet((2, 2))) == sorted([(0, 0), (1, 0), (0, 1), (1, 1)])
    assert sorted(b_alphabet((4,))) == [(0, 0), (1, 0), (2, 0), (3, 0)]
    assert sorted(b_alphabet((1, 1, 1, 1))) == [(0, 0), (0, 1), (0, 2), (0, 3)]
    with pytest.raises(WrongSize):
        b_alphabet((2, 1))


def test_wide_shapes_vanish():
    assert delta3_coefficient((5,)) == ZERO
    assert delta3_coefficient((5, 2, 1)) == ZERO
    assert positivity_report((6,)).status == "PASS"


@pytest.mark.parametrize("lam", list(partitions(3)), ids=str)
def test_degree_three_identity(lam):
    extra = 1 if lam == (1, 1, 1) else 0
    assert delta3_coefficient(lam) == g_coefficient(lam) - delta_e1_coefficient(lam) + extra


def test_catalan_coefficient():
    # the hook-free coefficient at n = 3 is the q,t-Catalan number
    assert delta3_coefficient((1, 1, 1)) == q ** 3 + q * q * t + q * t * t + t ** 3 + q * t


@pytest.mark.parametrize("n", range(8))
def test_polynomial_and_symmetric(n):
    for lam in partitions(n):
        p = delta3_coefficient(lam)
        assert p.tau() == p


@pytest.mark.parametrize("n", range(1, 7))
def test_partial_fraction_samples(n):
    for lam in partitions(n):
        assert delta3_via_F_samplecheck(lam, SAMPLES), lam


def test_sample_examples():
    assert delta3_via_F_samplecheck((1, 1, 1), [(2, 3), (5, 2)])
    assert delta3_via_F_samplecheck((1,), [(2, 3)])
    with pytest.raises(InvalidSample):
        delta3_via_F_samplecheck((1,), [(1, 1)])
    with pytest.raises(InvalidSample):
        delta3_F_formula((2, 1), 2, 4)


def test_positivity_probe():
    rep = positivity_report((1, 1, 1))
    assert rep.status == "PASS" and rep.nonnegative and rep.tau_symmetric
    rep = positivity_report((1, 1, 1, 1))
    assert rep.status == "PASS"
    assert rep.value_at_one == eval_rational(delta3_coefficient((1, 1, 1, 1)), 1, 1)


@pytest.mark.parametrize("n", range(8))
def test_positivity_up_to_seven(n):
    for lam in partitions(n):
        assert positivity_report(lam).status == "PASS", lam
