"""Acceptance suite: ten criteria, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines inline;
they are also written to the terminal when output is captured.
"""

import time
from contextlib import contextmanager
from fractions import Fraction
from math import comb


from deltapos.delta_core import (
    delta_e1_closed,
    delta_e1_coefficient,
    extract_certificate,
    f_poly,
    g_coefficient,
    g_raw_quotient,
    reconstruct,
)
from deltapos.delta_e3 import delta3_coefficient, delta3_via_F_samplecheck
from deltapos.enriched import WeightClass, g_via_all_enriched, g_via_leftovers, leftover_counts, weight_counts
from deltapos.genfun import build_F, check_F_properties, exponent_triples, g_via_genfun
from deltapos.qt_algebra import eval_rational, q, qt_analog as A, qt_range as R, t
from deltapos.recursion import (
    ThreePartShape,
    check_qt1,
    check_rank,
    g_00k_closed,
    g_a0k_closed,
    g_block_bruteforce,
    g_via_recursion,
)
from deltapos.shapes import conjugate, partitions, three_part_shape

QT = q * t


@contextmanager
def criterion(capsys, number, title, limit=None):
    start = time.perf_counter()
    status = "FAIL"
    try:
        yield
        status = "PASS"
    finally:
        elapsed = time.perf_counter() - start
        if limit is not None and elapsed >= limit:
            status = "FAIL"
        with capsys.disabled():
            print(f"\nCRITERION {number:2d} {status}  {title}  ({elapsed:.2f}s)")
    if limit is not None:
        assert elapsed < limit, f"took {elapsed:.1f}s, limit {limit}s"


def test_criterion_01_golden_values(capsys):
    with criterion(capsys, 1, "golden values of g_(1^4) and g_(2,1,1)", limit=1):
        assert g_coefficient((1, 1, 1, 1)) == A(2) + A(3) + 2 * A(4) + A(5) + A(6) + QT * (1 + A(2) + A(3))
        assert g_coefficient((2, 1, 1)) == A(1) + 2 * A(2) + 3 * A(3) + 2 * A(4) + A(5) + QT * (1 + A(2))


def test_criterion_02_g00k_expansions(capsys):
    with criterion(capsys, 2, "g[0,0,k] known expansions for k=5 and k=12", limit=1):
        assert g_00k_closed(5) == R(5, 8) + QT * R(3, 5) + QT ** 2 * A(2)
        assert g_00k_closed(12) == (
            R(12, 22) + QT * R(10, 19) + QT ** 2 * R(9, 16) + QT ** 3 * R(7, 13)
            + QT ** 4 * R(6, 10) + QT ** 5 * R(4, 7) + QT ** 6 * R(3, 4) + QT ** 7 * A(1)
        )


def test_criterion_03_five_routes_agree(capsys):
    with criterion(capsys, 3, "all routes to g agree for n <= 12, parts <= 3", limit=300):
        for n in range(13):
            for lam in partitions(n, 3):
                g = g_coefficient(lam)
                assert g_raw_quotient(lam) == g, lam
                assert g_via_recursion(ThreePartShape.from_partition(lam)) == g, lam
                assert g_via_all_enriched(lam) == g, lam
                assert g_via_leftovers(lam) == g, lam


def test_criterion_04_positive_certificates(capsys):
    with criterion(capsys, 4, "positive certificates reconstruct g for n <= 12"):
        for n in range(13):
            for lam in partitions(n):
                cert = extract_certificate(f_poly(lam))
                assert cert.positive, lam
                assert reconstruct(cert) == g_coefficient(lam), lam


def test_criterion_05_injection_accounting(capsys):
    with criterion(capsys, 5, "leftover accounting for |lam| <= 10", limit=120):
        for n in range(11):
            for lam in partitions(n):
                shape = conjugate(lam)
                counts = weight_counts(shape)
                left = leftover_counts(shape)
                for cls, count in counts.items():
                    i, j = cls.t_exp, cls.q_exp
                    if i > j:
                        diff = count - counts.get(WeightClass(j, i), 0)
                        assert diff >= 0, (lam, cls)
                        assert diff == left.get(cls, 0), (lam, cls)
                    elif i < j:
                        assert WeightClass(j, i) in counts, (lam, cls)
                assert all(c.t_exp > c.q_exp for c in left), lam


def test_criterion_06_specializations(capsys):
    with criterion(capsys, 6, "q=t=1 and t=1/q specializations"):
        for n in range(2, 13):
            assert check_qt1(n), n
        for n in range(2, 11):
            assert check_rank(n, [Fraction(2), Fraction(3), Fraction(5, 2)]), n
        for n in range(2, 16):
            assert eval_rational(g_00k_closed(n), 1, 1) == 2 * comb(n + 1, 3), n


def test_criterion_07_delta_e1(capsys):
    with criterion(capsys, 7, "Delta_e1 closed form for n <= 10"):
        for n in range(11):
            for lam in partitions(n):
                assert delta_e1_coefficient(lam) == delta_e1_closed(lam), lam


def test_criterion_08_generating_function(capsys):
    with criterion(capsys, 8, "seven-term series at degree 5", limit=120):
        F = build_F(5)
        report = check_F_properties(5, F)
        assert report.nonnegative and report.t_heavy
        for a, b, c in exponent_triples(5):
            assert g_via_genfun(a, b, c, 5, F) == g_coefficient(three_part_shape(c, b, a)), (a, b, c)


def test_criterion_09_delta_e3(capsys):
    with criterion(capsys, 9, "Delta_e3 identity, polynomiality, symmetry, samples"):
        for lam in partitions(3):
            extra = 1 if lam == (1, 1, 1) else 0
            assert delta3_coefficient(lam) == g_coefficient(lam) - delta_e1_coefficient(lam) + extra
        for n in range(8):
            for lam in partitions(n):
                p = delta3_coefficient(lam)
                assert p.tau() == p, lam
        samples = [(2, 3), (5, 2), (Fraction(3, 7), Fraction(5, 2))]
        for n in range(1, 7):
            for lam in partitions(n):
                assert delta3_via_F_samplecheck(lam, samples), lam


def test_criterion_10_corrected_ga0k(capsys):
    with criterion(capsys, 10, "g[a,0,k] follows the corrected ranges"):
        assert g_a0k_closed(1, 0) == A(1)
        assert g_a0k_closed(1, 1) == A(2) + A(3)
        assert g_a0k_closed(1, 2) == QT * A(2) + A(3) + A(4) + A(5)
        for a in range(7):
            for k in range(13):
                assert g_a0k_closed(a, k) == g_block_bruteforce(a, 0, k), (a, k)
