"""Continued fractions, border strips and brute-force P-partition enumeration.

A border strip ``G[a_1, ..., a_n]`` is stored as the list of its cells in the
order bottom-left to top-right.  A P-partition with parts at most ``m`` is a
labelling of those cells that weakly increases left-to-right along rows and
top-to-bottom along columns.  Along the strip that means the label may only
drop at an up step and may only rise at a right step.

Everything here is deliberately naive; it is the reference the matrix
formulas are checked against.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterator, Sequence

from .poly import IntLaurentPoly

__all__ = [
    "InvalidRational",
    "IndexOutOfRange",
    "CFrac",
    "BorderStrip",
    "PPartition",
    "cf_expand",
    "build_strip",
    "is_ppartition",
    "iter_labelings",
    "enum_ppartitions",
    "omega_gf",
    "omega_table",
    "deleted_first_column",
    "common_prefix_length",
]

UP = "U"
RIGHT = "R"


class InvalidRational(ValueError):
    """The rational is below 1 or has a non-positive denominator."""


class IndexOutOfRange(IndexError):
    pass


@dataclass(frozen=True)
class CFrac:
    """A finite continued fraction ``[a_1, ..., a_n]`` with positive terms."""

    terms: tuple[int, ...]

    def __post_init__(self):
        terms = tuple(int(t) for t in self.terms)
        if not terms:
            raise ValueError("a continued fraction needs at least one term")
        if any(t < 1 for t in terms):
            raise ValueError(f"continued fraction terms must be positive: {terms}")
        object.__setattr__(self, "terms", terms)

    @classmethod
    def of(cls, *terms: int) -> CFrac:
        return cls(tuple(terms))

    @classmethod
    def parse(cls, text: str) -> CFrac:
        """Parse ``"5,1,2"`` (brackets and spaces are tolerated)."""
        body = text.strip().strip("[]")
        return cls(tuple(int(t) for t in body.replace(" ", "").split(",") if t))

    @classmethod
    def from_rational(cls, x) -> CFrac:
        x = Fraction(x)
        return cf_expand(x.numerator, x.denominator)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __getitem__(self, k):
        return self.terms[k]

    @property
    def value(self) -> Fraction:
        v = Fraction(self.terms[-1])
        for a in reversed(self.terms[:-1]):
            v = a + 1 / v
        return v

    def canonical(self) -> CFrac:
        """The form whose last term is at least 2 (unless it is the integer 1)."""
        t = self.terms
        if len(t) >= 2 and t[-1] == 1:
            return CFrac(t[:-2] + (t[-2] + 1,))
        return self

    def alternate(self) -> CFrac | None:
        """The other CF of the same value (ending in 1), or None for ``[1]``."""
        t = self.terms
        if len(t) >= 2 and t[-1] == 1:
            return CFrac(t[:-2] + (t[-2] + 1,))
        if t[-1] >= 2:
            return CFrac(t[:-1] + (t[-1] - 1, 1))
        return None

    def with_parity(self, even: bool) -> CFrac:
        """Return the representation of the same value with even (or odd) length."""
        if (len(self) % 2 == 0) == even:
            return self
        alt = self.alternate()
        if alt is None:
            raise ValueError(f"{list(self.terms)} has no representation of the requested parity")
        return alt

    def tail(self) -> CFrac:
        if len(self) < 2:
            raise ValueError("an integer has no tail")
        return CFrac(self.terms[1:])

    def prefix(self, n: int) -> CFrac:
        return CFrac(self.terms[:n])

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.terms)) + "]"


def cf_expand(r: int, s: int) -> CFrac:
    """Continued fraction of ``r/s >= 1`` by the Euclidean algorithm.

    >>> cf_expand(17, 3).terms
    (5, 1, 2)
    """
    if s < 1:
        raise InvalidRational(f"denominator must be positive, got {s}")
    if r < s:
        raise InvalidRational(f"{r}/{s} is less than 1")
    g = gcd(r, s)
    r, s = r // g, s // g
    terms = []
    while s:
        a, rem = divmod(r, s)
        terms.append(a)
        r, s = s, rem
    return CFrac(tuple(terms))


@dataclass(frozen=True)
class BorderStrip:
    """Cells of ``G[a_1..a_n]`` as ``(row, col)`` pairs, row growing upwards.

    ``steps[t]`` is the direction from cell ``t+1`` to cell ``t+2`` (1-based
    cells), either ``"U"`` or ``"R"``.
    """

    cf: CFrac
    cells: tuple[tuple[int, int], ...]
    steps: tuple[str, ...]

    def __len__(self) -> int:
        return len(self.cells)

    def first_column_size(self) -> int:
        """Number of cells sharing the first cell's column (0 for the empty strip)."""
        if not self.cells:
            return 0
        col = self.cells[0][1]
        return sum(1 for _, c in self.cells if c == col)

    def to_json(self) -> dict:
        return {"cf": list(self.cf.terms), "cells": [list(c) for c in self.cells]}

    def render(self, labels: Sequence[int] | None = None) -> str:
        """ASCII drawing, top row first.  Cells show their label or ``#``."""
        if not self.cells:
            return "(empty strip)"
        rows = max(r for r, _ in self.cells) + 1
        cols = max(c for _, c in self.cells) + 1
        grid = [["."] * cols for _ in range(rows)]
        for idx, (r, c) in enumerate(self.cells):
            grid[r][c] = "#" if labels is None else str(labels[idx])
        return "\n".join("".join(row) for row in reversed(grid))


def _steps_for(cf: CFrac) -> list[str]:
    a = cf.terms
    n = len(a)
    if n == 1:
        return [UP] * max(a[0] - 2, 0)
    steps = [UP] * (a[0] - 1)
    for k in range(1, n - 1):  # a_2 .. a_{n-1}
        steps += [RIGHT if k % 2 == 1 else UP] * a[k]
    steps += [RIGHT if n % 2 == 0 else UP] * (a[-1] - 1)
    return steps


def build_strip(cf: CFrac | Sequence[int]) -> BorderStrip:
    """The border strip of a continued fraction.

    Start with one cell, then ``a_1 - 1`` up steps, ``a_2`` right steps,
    ``a_3`` up steps and so on, finishing with ``a_n - 1`` steps.  A single
    term ``[a]`` gives a vertical column of ``a - 1`` cells.
    """
    if not isinstance(cf, CFrac):
        cf = CFrac(tuple(cf))
    if len(cf) == 1 and cf[0] == 1:
        return BorderStrip(cf, (), ())
    steps = _steps_for(cf)
    cells = [(0, 0)]
    for s in steps:
        r, c = cells[-1]
        cells.append((r + 1, c) if s == UP else (r, c + 1))
    return BorderStrip(cf, tuple(cells), tuple(steps))


@dataclass(frozen=True)
class PPartition:
    labels: tuple[int, ...]
    m: int

    @property
    def weight(self) -> int:
        return sum(self.labels)

    @property
    def first(self) -> int:
        return self.labels[0]

    @property
    def last(self) -> int:
        return self.labels[-1]

    def __len__(self) -> int:
        return len(self.labels)


def is_ppartition(strip: BorderStrip, labels: Sequence[int], m: int) -> bool:
    if len(labels) != len(strip):
        return False
    if any(not 0 <= x <= m for x in labels):
        return False
    for t, s in enumerate(strip.steps):
        if s == UP and labels[t] < labels[t + 1]:
            return False
        if s == RIGHT and labels[t] > labels[t + 1]:
            return False
    return True


def iter_labelings(strip: BorderStrip, m: int, first_max: int | None = None) -> Iterator[tuple[int, ...]]:
    """All P-partitions of ``strip`` with parts in ``0..m`` as label tuples.

    Depth-first over cells in index order, trying larger labels first, so the
    output order is deterministic.  ``first_max`` caps the first part.
    """
    if m < 0:
        raise ValueError("part bound must be nonnegative")
    n = len(strip)
    if n == 0:
        yield ()
        return
    steps = strip.steps
    top = m if first_max is None else min(first_max, m)
    labels = [0] * n

    def rec(t: int):
        if t == n:
            yield tuple(labels)
            return
        prev = labels[t - 1]
        if steps[t - 1] == UP:
            lo, hi = 0, prev
        else:
            lo, hi = prev, m
        for v in range(hi, lo - 1, -1):
            labels[t] = v
            yield from rec(t + 1)

    for v in range(top, -1, -1):
        labels[0] = v
        yield from rec(1)


def enum_ppartitions(strip: BorderStrip, m: int) -> list[PPartition]:
    """Every element of ``Omega_m(strip)``; the empty strip has exactly one."""
    return [PPartition(lab, m) for lab in iter_labelings(strip, m)]


def _check_index(m: int, i: int, j: int) -> None:
    if not (1 <= i <= m + 1 and 1 <= j <= m + 1):
        raise IndexOutOfRange(f"(i, j) = ({i}, {j}) outside 1..{m + 1}")


def _admits(first: int, last: int, m: int, i: int, j: int, variant: str) -> bool:
    if first > m + 1 - i:
        return False
    if variant == "plain":
        return last <= m + 1 - j
    return last >= j - 1


def omega_gf(strip: BorderStrip, m: int, i: int, j: int, variant: str = "plain") -> IntLaurentPoly:
    """Weight generating function of the P-partitions with restricted end labels.

    ``plain``: first part ``<= m+1-i`` and last part ``<= m+1-j``.
    ``bar``: first part ``<= m+1-i`` and last part ``>= j-1``.
    The empty strip contributes 1 exactly when ``m + 2 - i - j >= 0``.
    """
    if variant not in ("plain", "bar"):
        raise ValueError(f"unknown variant {variant!r}")
    _check_index(m, i, j)
    if len(strip) == 0:
        return IntLaurentPoly.constant(1 if m + 2 - i - j >= 0 else 0)
    counts: dict[int, int] = defaultdict(int)
    for p in enum_ppartitions(strip, m):
        if _admits(p.first, p.last, m, i, j, variant):
            counts[p.weight] += 1
    return IntLaurentPoly.from_dict(counts)


def omega_table(strip: BorderStrip, m: int, variant: str = "plain") -> list[list[IntLaurentPoly]]:
    """All ``(m+1)^2`` values of :func:`omega_gf` from a single enumeration pass.

    Entry ``[i-1][j-1]`` corresponds to ``omega_gf(strip, m, i, j, variant)``.
    """
    if variant not in ("plain", "bar"):
        raise ValueError(f"unknown variant {variant!r}")
    size = m + 1
    if len(strip) == 0:
        return [
            [IntLaurentPoly.constant(1 if m + 2 - i - j >= 0 else 0) for j in range(1, size + 1)]
            for i in range(1, size + 1)
        ]
    # bucket by (first, last) then accumulate
    by_ends: dict[tuple[int, int], dict[int, int]] = defaultdict(lambda: defaultdict(int))
    for lab in iter_labelings(strip, m):
        by_ends[lab[0], lab[-1]][sum(lab)] += 1
    table = []
    for i in range(1, size + 1):
        row = []
        for j in range(1, size + 1):
            acc: dict[int, int] = defaultdict(int)
            for (f, l), wts in by_ends.items():
                if _admits(f, l, m, i, j, variant):
                    for w, c in wts.items():
                        acc[w] += c
            row.append(IntLaurentPoly.from_dict(acc))
        table.append(row)
    return table


def deleted_first_column(cf: CFrac) -> CFrac:
    """CF whose strip is ``G[a_1..a_n]`` with its first column removed.

    This is ``[1, a_2 - 1, a_3, ...]``.  A zero second entry is folded with
    ``[1, 0, c, ...] = [1 + c, ...]``; ``[a, 1]`` loses everything and gives
    the empty strip ``[1]``.
    """
    a = cf.terms
    if len(a) < 2:
        raise ValueError("an integer CF has no second column")
    if a[1] > 1:
        return CFrac((1, a[1] - 1) + a[2:])
    if len(a) == 2:
        return CFrac((1,))
    return CFrac((1 + a[2],) + a[3:])


def common_prefix_length(g: BorderStrip, h: BorderStrip) -> int:
    """Number of leading cells the two strips share (same positions, same shape)."""
    d = 0
    for x, y in zip(g.cells, h.cells):
        if x != y:
            break
        d += 1
    return d
