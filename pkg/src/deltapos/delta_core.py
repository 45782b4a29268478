"""Schur coefficients of Delta_{e_2} e_n and Delta_{e_1} e_n.

``g_coefficient(lam)`` is the coefficient of ``s_lam`` in ``Delta_{e_2} e_n``.
It is computed as ``(F - tau F) / (t - q)`` where

    F = (s_{lam'}[1 + t + t^2] - s_{lam'}[1 + t + q]) / (t^2 - q),

and independently from the three-term alternating quotient.  Every division
is exact; a :class:`~deltapos.qt_algebra.NonDivisible` escaping from here
means an identity failed.

Certificates
------------
Writing ``F = sum a[i, j] t^i q^j`` (``i`` indexes **t**), one has

    g = sum_{i > j} (a[i, j] - a[j, i]) (qt)^j [i - j]_{q,t},

so a certificate entry ``(shift=j, length=i-j, mult=a[i,j]-a[j,i])`` records
one summand.  The certificate is positive when every ``mult >= 0``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .qt_algebra import (
    T2_MINUS_Q,
    T_MINUS_Q,
    T_MINUS_Q2,
    ZERO,
    QtPoly,
    exact_div,
    q,
    qt_analog,
    qt_analog_base,
    qt_range,
    t,
)
from .shapes import Partition, conjugate, enumerate_ssyt, schur_eval

ONE_T_T2 = ((0, 0), (0, 1), (0, 2))  # 1 + t + t^2
ONE_T_Q = ((0, 0), (0, 1), (1, 0))  # 1 + t + q
ONE_Q_Q2 = ((0, 0), (1, 0), (2, 0))  # 1 + q + q^2
ONE_T = ((0, 0), (0, 1))
ONE_Q = ((0, 0), (1, 0))


@lru_cache(maxsize=None)
def f_poly(lam: Sequence[int]) -> QtPoly:
    """``F_{lam'}`` from the two Schur specializations."""
    lam = Partition(lam)
    if lam.first() > 3:
        return ZERO
    mu = conjugate(lam)
    diff = schur_eval(mu, ONE_T_T2) - schur_eval(mu, ONE_T_Q)
    return exact_div(diff, T2_MINUS_Q)


def f_poly_tableau(lam: Sequence[int]) -> QtPoly:
    """``F_{lam'}`` as a sum over SSYT T of shape lam' over {0,1,2} of
    ``t^{#1s} [#2s]_{t^2,q}``."""
    mu = conjugate(Partition(lam))
    total = ZERO
    for tab in enumerate_ssyt(mu, 2):
        total += qt_analog_base(tab.count(2), "t2,q").shift(0, tab.count(1))
    return total


@lru_cache(maxsize=None)
def g_coefficient(lam: Sequence[int]) -> QtPoly:
    lam = Partition(lam)
    if lam.first() > 3:
        return ZERO
    f = f_poly(lam)
    return exact_div(f - f.tau(), T_MINUS_Q)


def g_raw_quotient(lam: Sequence[int]) -> QtPoly:
    """The three-term alternating formula divided out factor by factor.

    No short-circuit for wide ``lam``: the specializations vanish on their own.
    """
    mu = conjugate(Partition(lam))
    num = (
        (t - q * q) * schur_eval(mu, ONE_T_T2)
        - (q + t + 1) * (t - q) * schur_eval(mu, ONE_T_Q)
        + (t * t - q) * schur_eval(mu, ONE_Q_Q2)
    )
    for d in (T_MINUS_Q, T2_MINUS_Q, T_MINUS_Q2):
        num = exact_div(num, d)
    return num


def delta_e1_coefficient(lam: Sequence[int]) -> QtPoly:
    """Coefficient of ``s_lam`` in ``Delta_{e_1} e_n``."""
    mu = conjugate(Partition(lam))
    return exact_div(schur_eval(mu, ONE_T) - schur_eval(mu, ONE_Q), T_MINUS_Q)


def delta_e1_closed(lam: Sequence[int]) -> QtPoly:
    lam = Partition(lam)
    n = lam.size
    m = lam.count(2)
    if any(p > 2 for p in lam):
        return ZERO
    return qt_range(m, n - m)


# -- certificates -----------------------------------------------------------


@dataclass(frozen=True)
class Certificate:
    """``sum mult * (qt)^shift * [length]_{q,t}`` over ``entries``."""

    entries: tuple[tuple[int, int, int], ...] = field(default_factory=tuple)

    def __post_init__(self):
        keys = [(s, d) for s, d, _ in self.entries]
        if keys != sorted(set(keys)):
            raise ValueError("certificate entries must be sorted and unique")
        if any(s < 0 or d < 1 for s, d in keys):
            raise ValueError("certificate needs shift >= 0 and length >= 1")

    @property
    def positive(self) -> bool:
        return all(m >= 0 for _, _, m in self.entries)

    def to_dict(self) -> dict:
        return {
            "entries": [
                {"shift": s, "length": d, "mult": str(m)} for s, d, m in self.entries
            ],
            "positive": self.positive,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data) -> "Certificate":
        return cls(tuple(
            (int(e["shift"]), int(e["length"]), int(e["mult"])) for e in data["entries"]
        ))

    def __str__(self) -> str:
        return format_certificate(self)


def extract_certificate(f: QtPoly) -> Certificate:
    entries = []
    for (qe, te), a in f.items():
        if te > qe:
            b = a - f.coeff(te, qe)
            if b:
                entries.append((qe, te - qe, b))
    for (qe, te), a in f.items():
        # terms whose mirror image is absent from f
        if qe > te and f.coeff(te, qe) == 0:
            entries.append((te, qe - te, -a))
    return Certificate(tuple(sorted(entries)))


def reconstruct(cert: Certificate | Iterable[tuple[int, int, int]]) -> QtPoly:
    entries = cert.entries if isinstance(cert, Certificate) else cert
    total = ZERO
    for shift, length, mult in entries:
        total += qt_analog(length).shift(shift, shift) * mult
    return total


def format_certificate(cert: Certificate) -> str:
    """Render e.g. ``[2]+[3]+2[4]+qt(1+[2])``; ``[1]`` prints as ``1``
    inside a ``(qt)^k(...)`` group and as ``[1]`` at top level."""
    if not cert.entries:
        return "0"
    groups: dict[int, list[tuple[int, int]]] = {}
    for s, d, m in cert.entries:
        groups.setdefault(s, []).append((d, m))
    pieces = []
    for s in sorted(groups):
        inner = []
        for d, m in groups[s]:
            coeff = "" if m == 1 else ("-" if m == -1 else str(m))
            body = "1" if (d == 1 and s > 0) else f"[{d}]"
            if body == "1" and coeff not in ("", "-"):
                inner.append(coeff)
            else:
                inner.append(f"{coeff}{body}")
        text = "+".join(inner).replace("+-", "-")
        if s == 0:
            pieces.append(text)
        else:
            prefix = "qt" if s == 1 else f"(qt)^{s}"
            pieces.append(f"{prefix}({text})" if len(inner) > 1 or text != "1" else prefix)
    return "+".join(pieces).replace("+-", "-")
