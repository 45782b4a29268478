"""Enriched tableaux and the injection proof of positivity.

An enriched tableau is an SSYT over {0,1,2} containing at least one 2, whose
2's (read left to right; a column-strict filling has at most one 2 per
column) are decorated as: some plain 2's, then some barred 2's, then exactly
one hatted 2.  Its weight is ``t^{#1 + 2 #bar} q^{#plain}`` and the weights
sum to ``F_{lam'}``.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .qt_algebra import T_MINUS_Q, ZERO, QtPoly, exact_div, qt_analog
from .shapes import Partition, Ssyt, conjugate, enumerate_ssyt

log = logging.getLogger(__name__)

PLAIN, BAR, HAT = "2", "2bar", "2hat"


class MapUndefined(Exception):
    """The injection could not build a valid image tableau."""


@dataclass(frozen=True)
class WeightClass:
    t_exp: int
    q_exp: int

    def monomial(self) -> QtPoly:
        return QtPoly.monomial(self.q_exp, self.t_exp)


@dataclass(frozen=True)
class EnrichedTableau:
    base: Ssyt
    num_undecorated: int
    num_barred: int

    def __post_init__(self):
        k2 = self.base.count(2)
        if k2 == 0:
            raise ValueError("an enriched tableau needs at least one 2")
        if self.num_undecorated < 0 or self.num_barred < 0:
            raise ValueError("decoration counts must be nonnegative")
        if self.num_undecorated + self.num_barred + 1 != k2:
            raise ValueError("decorations must leave exactly one hatted 2")

    def twos(self) -> list[tuple[int, int]]:
        """``(row, col)`` of every 2 in reading order (by column)."""
        cells = [(r, c) for r, c, x in self.base.cells() if x == 2]
        cols = [c for _, c in cells]
        assert len(set(cols)) == len(cols), "two 2's share a column"
        return sorted(cells, key=lambda rc: rc[1])

    def decorations(self) -> dict[tuple[int, int], str]:
        out = {}
        for n, cell in enumerate(self.twos()):
            if n < self.num_undecorated:
                out[cell] = PLAIN
            elif n < self.num_undecorated + self.num_barred:
                out[cell] = BAR
            else:
                out[cell] = HAT
        return out

    def hat_row(self) -> int:
        return self.twos()[-1][0]

    @property
    def kappa1(self) -> int:
        return self.base.count(1)

    def excess(self) -> int:
        """``#1 + 2 #bar - #plain``."""
        return self.kappa1 + 2 * self.num_barred - self.num_undecorated

    def __str__(self) -> str:
        marks = self.decorations()
        sym = {PLAIN: "2", BAR: "2-", HAT: "2^"}
        lines = []
        for r in reversed(range(len(self.base.rows))):
            row = self.base.rows[r]
            cells = [sym[marks[(r, c)]] if x == 2 else str(x) for c, x in enumerate(row)]
            lines.append(" ".join(f"{s:>2}" for s in cells))
        return "\n".join(lines)


def decorate(base: Ssyt) -> Iterator[EnrichedTableau]:
    k2 = base.count(2)
    for u in range(k2):
        yield EnrichedTableau(base, u, k2 - 1 - u)


def enumerate_enriched(shape: Sequence[int]) -> Iterator[EnrichedTableau]:
    """All enriched tableaux whose base has the given shape."""
    for base in enumerate_ssyt(shape, 2):
        yield from decorate(base)


def weight_class(tab: EnrichedTableau) -> WeightClass:
    return WeightClass(tab.kappa1 + 2 * tab.num_barred, tab.num_undecorated)


@lru_cache(maxsize=None)
def _weight_counts(shape: Partition) -> dict[WeightClass, int]:
    return dict(Counter(weight_class(x) for x in enumerate_enriched(shape)))


def weight_counts(shape: Sequence[int]) -> dict[WeightClass, int]:
    return dict(_weight_counts(Partition(shape)))


def g_via_all_enriched(lam: Sequence[int]) -> QtPoly:
    """Sum the antisymmetrized weight of every enriched tableau of shape lam'."""
    shape = conjugate(Partition(lam))
    total = ZERO
    for cls, n in _weight_counts(shape).items():
        i, j = cls.t_exp, cls.q_exp
        if i == j:
            continue
        diff = QtPoly({(j, i): 1, (i, j): -1})  # t^i q^j - t^j q^i
        total += exact_div(diff, T_MINUS_Q) * n
    return total


def ones_on_height_two(tab: EnrichedTableau) -> int:
    """Columns of height exactly 2 whose top entry is 1."""
    return sum(1 for col in tab.base.columns() if len(col) == 2 and col[1] == 1)


def is_leftover(tab: EnrichedTableau) -> bool:
    d = tab.excess()
    if d < 1:
        return False
    marks = tab.decorations()
    if any(r == 2 and m in (BAR, HAT) for (r, _), m in marks.items()):
        return True
    hat = tab.hat_row()
    ones = ones_on_height_two(tab)
    if hat == 1:
        return ones < d
    if hat == 0:
        plain_bottom = sum(1 for (r, _), m in marks.items() if r == 0 and m == PLAIN)
        return plain_bottom < 2 * tab.num_barred and ones < d
    return False


def leftovers(shape: Sequence[int]) -> Iterator[EnrichedTableau]:
    for tab in enumerate_enriched(shape):
        if is_leftover(tab):
            yield tab


def leftover_counts(shape: Sequence[int]) -> dict[WeightClass, int]:
    return dict(Counter(weight_class(x) for x in leftovers(shape)))


def g_via_leftovers(lam: Sequence[int]) -> QtPoly:
    """``sum (qt)^{#plain} [excess]_{q,t}`` over leftover tableaux of shape lam'."""
    shape = conjugate(Partition(lam))
    total = ZERO
    for tab in leftovers(shape):
        k = tab.num_undecorated
        total += qt_analog(tab.excess()).shift(k, k)
    return total


# -- the injection ------------------------------------------------------------


def _rebuild(tab: EnrichedTableau, rows: list[list[int]], plain: int) -> EnrichedTableau:
    try:
        base = Ssyt(tab.base.shape, tuple(tuple(r) for r in rows))
        return EnrichedTableau(base, plain, tab.num_barred)
    except ValueError as exc:
        raise MapUndefined(str(exc)) from exc


def injection_case(tab: EnrichedTableau) -> int:
    """1 or 2: which case of the injection applies to a q-heavy tableau."""
    marks = tab.decorations()
    plain_bottom = sum(1 for (r, _), m in marks.items() if r == 0 and m == PLAIN)
    if tab.hat_row() == 0 and plain_bottom >= 2 * tab.num_barred:
        return 1
    return 2


def injection_case_maps(tab: EnrichedTableau, i: int | None = None,
                        j: int | None = None) -> EnrichedTableau:
    """Map a tableau of class (t^j, q^i), i > j, to one of class (t^i, q^j).

    Case 1 freezes ``2 #bar`` plain 2's of the bottom row and swaps the counts
    of 1's and the remaining plain 2's among height-1 cells, and of 1's and
    2's above 0's in the second row.  Case 2 turns the leftmost ``i - j``
    2's sitting above 0's into 1's.  Barred count is kept; the plain count is
    whatever the image's 2's leave over.
    """
    cls = weight_class(tab)
    if (i, j) not in ((None, None), (cls.q_exp, cls.t_exp)):
        raise ValueError(f"tableau has class {cls}, not (t^{j}, q^{i})")
    i, j = cls.q_exp, cls.t_exp
    if i <= j:
        raise ValueError(f"injection needs a q-heavy tableau, got class {cls}")
    rows = [list(r) for r in tab.base.rows]
    heights = conjugate(tab.base.shape)
    over_zero = [c for c in range(len(rows[1]) if len(rows) > 1 else 0)
                 if heights[c] == 2 and rows[0][c] == 0]

    if injection_case(tab) == 1:
        single = [c for c in range(len(rows[0])) if heights[c] == 1]
        cells = [rows[0][c] for c in single]
        ones, twos = cells.count(1), cells.count(2)
        zeros = len(cells) - ones - twos
        # twos holds plain + bar + hat; only plain ones beyond the frozen are swapped
        decorated = tab.num_barred + 1
        frozen = 2 * tab.num_barred
        free = twos - decorated - frozen
        if free < 0:
            raise MapUndefined("not enough plain 2's in the bottom row")
        new_cells = [0] * zeros + [1] * free + [2] * (ones + frozen + decorated)
        for c, v in zip(single, new_cells):
            rows[0][c] = v
        tops = [rows[1][c] for c in over_zero]
        new_tops = [1] * tops.count(2) + [2] * tops.count(1)
        for c, v in zip(over_zero, new_tops):
            rows[1][c] = v
    else:
        flip = i - j
        targets = [c for c in over_zero if rows[1][c] == 2][:flip]
        if len(targets) < flip:
            raise MapUndefined("fewer 2's above 0's than i - j")
        for c in targets:
            rows[1][c] = 1

    total_twos = sum(r.count(2) for r in rows)
    plain = total_twos - tab.num_barred - 1
    image = _rebuild(tab, rows, plain)
    if weight_class(image) != WeightClass(i, j):
        raise MapUndefined(f"image has class {weight_class(image)}, wanted ({i}, {j})")
    return image


def check_injection(shape: Sequence[int]) -> dict:
    """Apply the injection to every q-heavy tableau of ``shape``.

    Returns counts of successes, :class:`MapUndefined` failures, collisions
    among images, and images that land on a leftover tableau.
    """
    images: dict[EnrichedTableau, EnrichedTableau] = {}
    failures = collisions = hit_leftover = 0
    for tab in enumerate_enriched(shape):
        cls = weight_class(tab)
        if cls.q_exp <= cls.t_exp:
            continue
        try:
            img = injection_case_maps(tab)
        except MapUndefined as exc:
            failures += 1
            log.warning("injection undefined on\n%s\n(%s)", tab, exc)
            continue
        if img in images:
            collisions += 1
        images[img] = tab
        if is_leftover(img):
            hit_leftover += 1
    return {
        "mapped": len(images) + collisions,
        "undefined": failures,
        "collisions": collisions,
        "hit_leftover": hit_leftover,
    }
