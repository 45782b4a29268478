"""Partitions, semistandard tableaux and Schur specializations.

Tableaux use French orientation: ``rows[0]`` is the bottom (longest) row,
entries weakly increase to the right and strictly increase upward.  Entries
are 0-based, so a filling "over {0,1,2}" has ``max_entry == 2``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .qt_algebra import ZERO, QtPoly


class Partition(tuple):
    """A weakly decreasing tuple of positive integers."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def first(self) -> int:
        """Largest part (0 for the empty partition)."""
        return self[0] if self else 0

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def multiplicities(self) -> Counter:
        return Counter(self)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``"3,2,2,1"``; the empty string gives the empty partition."""
        text = text.strip()
        if not text:
            return cls()
        return cls(int(x) for x in text.split(","))

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"


def conjugate(p: Sequence[int]) -> Partition:
    if not p:
        return Partition()
    return Partition(sum(1 for x in p if x > j) for j in range(p[0]))


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` (optionally with parts at most ``max_part``)."""
    if max_part is None:
        max_part = n

    def rec(rem, cap):
        if rem == 0:
            yield ()
            return
        for k in range(min(rem, cap), 0, -1):
            for rest in rec(rem - k, k):
                yield (k,) + rest

    for parts in rec(n, max_part):
        yield Partition(parts)


def three_part_shape(a: int, b: int, c: int) -> Partition:
    """``(3^a, 2^b, 1^c)``."""
    return Partition((3,) * a + (2,) * b + (1,) * c)


# -- tableaux ---------------------------------------------------------------


@dataclass(frozen=True)
class Ssyt:
    shape: Partition
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if tuple(len(r) for r in self.rows) != tuple(self.shape):
            raise ValueError("row lengths do not match shape")
        for r in self.rows:
            if any(a > b for a, b in zip(r, r[1:])):
                raise ValueError(f"row not weakly increasing: {r}")
        for lower, upper in zip(self.rows, self.rows[1:]):
            if any(upper[c] <= lower[c] for c in range(len(upper))):
                raise ValueError("column not strictly increasing")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "Ssyt":
        rows = tuple(tuple(r) for r in rows)
        return cls(Partition(len(r) for r in rows), rows)

    def column(self, c: int) -> tuple[int, ...]:
        return tuple(r[c] for r in self.rows if len(r) > c)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(c) for c in range(self.shape.first())]

    def content(self, n_letters: int) -> tuple[int, ...]:
        counts = [0] * n_letters
        for r in self.rows:
            for x in r:
                counts[x] += 1
        return tuple(counts)

    def count(self, value: int) -> int:
        return sum(r.count(value) for r in self.rows)

    def cells(self) -> Iterator[tuple[int, int, int]]:
        """``(row, col, entry)`` with rows counted from the bottom, 0-based."""
        for i, r in enumerate(self.rows):
            for j, x in enumerate(r):
                yield i, j, x


def enumerate_ssyt(shape: Sequence[int], max_entry: int) -> Iterator[Ssyt]:
    """Every SSYT of ``shape`` with entries in ``0..max_entry``.

    Yields in lexicographic order of the row-major entry sequence (bottom row
    first).
    """
    shape = Partition(shape)
    if len(shape) > max_entry + 1:
        return
    heights = conjugate(shape)
    cells = [(i, j) for i, length in enumerate(shape) for j in range(length)]
    rows = [[0] * length for length in shape]

    def rec(idx):
        if idx == len(cells):
            yield Ssyt(shape, tuple(tuple(r) for r in rows))
            return
        i, j = cells[idx]
        lo = 0
        if j > 0:
            lo = rows[i][j - 1]
        if i > 0:
            lo = max(lo, rows[i - 1][j] + 1)
        hi = max_entry - (heights[j] - 1 - i)
        for v in range(lo, hi + 1):
            rows[i][j] = v
            yield from rec(idx + 1)

    yield from rec(0)


@lru_cache(maxsize=None)
def content_counts(shape: Partition, n_letters: int) -> dict[tuple[int, ...], int]:
    """Number of SSYT of ``shape`` over ``0..n_letters-1`` with each content."""
    counts: Counter = Counter()
    if n_letters == 0:
        if not shape:
            counts[()] = 1
        return dict(counts)
    for tab in enumerate_ssyt(shape, n_letters - 1):
        counts[tab.content(n_letters)] += 1
    return dict(counts)


# -- alphabets and Schur specializations -----------------------------------


class Alphabet(tuple):
    """A tuple of monic monomials, stored as exponent pairs ``(i, j)``."""

    def __new__(cls, letters: Iterable):
        out = []
        for x in letters:
            if isinstance(x, QtPoly):
                if len(x) != 1:
                    raise ValueError(f"letter {x} is not a monomial")
                (key, c), = x.items()
                if c != 1:
                    raise ValueError(f"letter {x} is not monic")
                out.append(key)
            else:
                i, j = x
                out.append((int(i), int(j)))
        return super().__new__(cls, out)

    def letters(self) -> list[QtPoly]:
        return [QtPoly.monomial(i, j) for i, j in self]


def alphabet(*letters) -> Alphabet:
    """``alphabet((0,0), (1,0), (0,1))`` is ``1 + q + t``."""
    return Alphabet(letters)


def schur_eval(lam: Sequence[int], letters: Sequence) -> QtPoly:
    """``s_lam[a_1 + ... + a_N]`` for monic monomials ``a_k``."""
    alpha = letters if isinstance(letters, Alphabet) else Alphabet(letters)
    return _schur_eval(Partition(lam), alpha)


@lru_cache(maxsize=None)
def _schur_eval(lam: Partition, alpha: Alphabet) -> QtPoly:
    if len(lam) > len(alpha):
        return ZERO
    out: dict[tuple[int, int], int] = {}
    for content, n in content_counts(lam, len(alpha)).items():
        i = sum(k * a[0] for k, a in zip(content, alpha))
        j = sum(k * a[1] for k, a in zip(content, alpha))
        out[(i, j)] = out.get((i, j), 0) + n
    return QtPoly(out)


# -- block signature of three-row fillings ---------------------------------


@dataclass(frozen=True)
class BlockSignature:
    """Column-type decomposition of an SSYT over {0,1,2} with at most 3 rows.

    ``tag`` is ``"A2"`` (height-2 columns with 1 at the bottom) or ``"A0"``
    (height-1 cells holding 0); ``tagged`` is the corresponding count.
    """

    a1: int
    k1: int
    tag: str
    tagged: int
    k2: int

    @property
    def a2(self) -> int:
        return self.tagged if self.tag == "A2" else 0

    @property
    def a0(self) -> int:
        return self.tagged if self.tag == "A0" else 0

    def block_args(self) -> tuple[int, int, int]:
        """Arguments ``(a1 + a2, k1, k2)`` of the block sum this filling feeds."""
        return (self.a1 + self.a2, self.k1, self.k2)


def classify_blocks(tab: Ssyt) -> BlockSignature:
    if len(tab.rows) > 3 or any(x > 2 for _, _, x in tab.cells()):
        raise ValueError("classify_blocks needs a filling over {0,1,2} with <= 3 rows")
    a1 = k1 = a2 = a0 = k2 = 0
    for col in tab.columns():
        if len(col) == 3:
            a1 += 1
        elif len(col) == 2:
            if col[0] == 0:
                k1 += 1
            else:
                a2 += 1
        elif col[0] == 0:
            a0 += 1
        else:
            k2 += 1
    # a nonzero a2 forces every height-1 cell to be >= 1
    assert not (a2 and a0)
    if a0:
        return BlockSignature(a1, k1, "A0", a0, k2)
    return BlockSignature(a1, k1, "A2", a2, k2)
