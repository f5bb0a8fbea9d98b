"""Exact rational scalars and fraction-free linear algebra.

Every quantity in this package is an exact rational number, represented by
the standard library ``fractions.Fraction`` (always reduced, denominator
positive).  This module adds the strict text form used by the JSON
interfaces and the linear-algebra kernel everything else is built on:
rank, nullspace and linear solving over the rationals.

Elimination is fraction-free in the Bareiss style.  Each row is first
scaled by the least common multiple of its denominators (an invertible row
operation, so rank, nullspace and solution sets are unchanged), after which
all arithmetic happens in arbitrary-precision integers.  The one-step
Bareiss update

    a[i][j] <- (pivot * a[i][j] - a[i][c] * a[r][j]) / previous_pivot

keeps every intermediate entry an integer (a minor of the scaled matrix),
which controls the coefficient blow-up that plain fraction elimination
suffers from.  The pivot rule is deterministic: columns are scanned left to
right and within a column rows top to bottom, the first nonzero entry
wins.  Identical inputs therefore yield identical echelon forms, hence
identical nullspace bases and solutions.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

Rational = Fraction

_RATIONAL_RE = re.compile(r"^(0|-?[1-9][0-9]*)(?:/([1-9][0-9]*))?$")


def parse_rational(text: str) -> Fraction:
    """Parse the strict text form ``p`` or ``p/q``.

    The denominator must be positive and the fraction already in lowest
    terms; anything else (including ``2/4``, ``1/-2``, ``0/5``, ``1.5``,
    leading zeros) raises ValueError.
    """
    if not isinstance(text, str):
        raise ValueError(f"rational must be a string, got {type(text).__name__}")
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"malformed rational {text!r}")
    p = int(m.group(1))
    if m.group(2) is None:
        return Fraction(p)
    q = int(m.group(2))
    if q == 1:
        raise ValueError(f"rational {text!r} must drop the unit denominator")
    if math.gcd(abs(p), q) != 1:
        raise ValueError(f"rational {text!r} is not in lowest terms")
    return Fraction(p, q)


def format_rational(value: Fraction) -> str:
    """Canonical text form: ``p`` for integers, ``p/q`` otherwise."""
    return str(Fraction(value))


@dataclass(frozen=True)
class Matrix:
    """Immutable dense matrix of Fractions, row-major."""

    rows: int
    cols: int
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative matrix dimensions")
        if len(self.entries) != self.rows:
            raise ValueError("row count does not match entries")
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("ragged matrix rows")

    @staticmethod
    def from_rows(rows: Sequence[Sequence[Fraction | int]], cols: Optional[int] = None) -> "Matrix":
        data = tuple(tuple(Fraction(v) for v in row) for row in rows)
        if data:
            width = len(data[0])
            if cols is not None and cols != width:
                raise ValueError("explicit column count disagrees with rows")
        else:
            if cols is None:
                raise ValueError("column count required for a matrix with no rows")
            width = cols
        return Matrix(len(data), width, data)

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i]

    def transpose(self) -> "Matrix":
        data = tuple(
            tuple(self.entries[i][j] for i in range(self.rows)) for j in range(self.cols)
        )
        return Matrix(self.cols, self.rows, data)

    def matvec(self, v: Sequence[Fraction]) -> list[Fraction]:
        if len(v) != self.cols:
            raise ValueError("vector length does not match column count")
        return [sum((r[j] * v[j] for j in range(self.cols)), Fraction(0)) for r in self.entries]


def _scaled_int_rows(rows: Sequence[Sequence[Fraction]]) -> list[list[int]]:
    out = []
    for row in rows:
        scale = math.lcm(*(f.denominator for f in row)) if row else 1
        out.append([f.numerator * (scale // f.denominator) for f in row])
    return out


def _bareiss_echelon(
    int_rows: list[list[int]], width: int, pivot_limit: Optional[int] = None
) -> tuple[list[int], list[list[int]]]:
    """Fraction-free row echelon form.  Returns (pivot columns, echelon rows).

    Pivots are searched only in the first ``pivot_limit`` columns; updates
    run across the full ``width`` (this lets an augmented column ride along
    in solve without ever being chosen as a pivot).
    """
    m = [row[:] for row in int_rows]
    limit = width if pivot_limit is None else pivot_limit
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(limit):
        if r >= len(m):
            break
        pr = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pr is None:
            continue
        if pr != r:
            m[r], m[pr] = m[pr], m[r]
        p = m[r][c]
        row_r = m[r]
        for i in range(r + 1, len(m)):
            row_i = m[i]
            f = row_i[c]
            for j in range(c + 1, width):
                q, rem = divmod(p * row_i[j] - f * row_r[j], prev)
                if rem:
                    raise ArithmeticError("fraction-free elimination lost exactness")
                row_i[j] = q
            row_i[c] = 0
        prev = p
        pivots.append(c)
        r += 1
    return pivots, m


def rank(m: Matrix) -> int:
    """Rank over the rationals."""
    pivots, _ = _bareiss_echelon(_scaled_int_rows(m.entries), m.cols)
    return len(pivots)


def nullspace(m: Matrix) -> list[list[Fraction]]:
    """Deterministic basis of the right nullspace, one vector per free column.

    Vectors are ordered by their free column; the free coordinate is 1 and
    all other free coordinates are 0.  Empty list when the kernel is zero.
    """
    pivots, ech = _bareiss_echelon(_scaled_int_rows(m.entries), m.cols)
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    basis = []
    for f in free:
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for i in range(len(pivots) - 1, -1, -1):
            c = pivots[i]
            row = ech[i]
            s = Fraction(0)
            for j in range(c + 1, m.cols):
                if row[j] and v[j]:
                    s += Fraction(row[j]) * v[j]
            v[c] = -s / row[c]
        basis.append(v)
    return basis


def solve(m: Matrix, rhs: Sequence[Fraction | int]) -> Optional[list[Fraction]]:
    """One exact solution of ``m x = rhs``, or None when inconsistent.

    Free variables are set to zero, so the answer is deterministic.
    """
    if len(rhs) != m.rows:
        raise ValueError("right-hand side length does not match row count")
    augmented = [list(row) + [Fraction(v)] for row, v in zip(m.entries, rhs)]
    int_rows = _scaled_int_rows(augmented)
    pivots, ech = _bareiss_echelon(int_rows, m.cols + 1, pivot_limit=m.cols)
    for i in range(len(pivots), len(ech)):
        if ech[i][m.cols]:
            return None
    x = [Fraction(0)] * m.cols
    for i in range(len(pivots) - 1, -1, -1):
        c = pivots[i]
        row = ech[i]
        s = Fraction(row[m.cols])
        for j in range(c + 1, m.cols):
            if row[j] and x[j]:
                s -= Fraction(row[j]) * x[j]
        x[c] = s / row[c]
    return x


class RankTracker:
    """Incremental rank of a growing set of rows.

    Keeps a reduced row form over Fractions.  Used by the generators, where
    thousands of candidate rows are tested one at a time and re-running a
    full elimination per candidate would be wasteful.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self._pivots: list[tuple[int, list[Fraction]]] = []

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def _reduced(self, row: Sequence[Fraction | int]) -> list[Fraction]:
        if len(row) != self.ncols:
            raise ValueError("row length does not match column count")
        work = [Fraction(v) for v in row]
        for col, prow in self._pivots:
            f = work[col]
            if f:
                for j in range(col, self.ncols):
                    if prow[j]:
                        work[j] -= f * prow[j]
        return work

    def would_increase(self, row: Sequence[Fraction | int]) -> bool:
        return any(self._reduced(row))

    def add(self, row: Sequence[Fraction | int]) -> bool:
        """Add the row; return True when it increased the rank."""
        work = self._reduced(row)
        pc = next((j for j, v in enumerate(work) if v), None)
        if pc is None:
            return False
        lead = work[pc]
        normalized = [v / lead for v in work]
        self._pivots.append((pc, normalized))
        self._pivots.sort(key=lambda item: item[0])
        return True
