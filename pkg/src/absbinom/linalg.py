"""Fraction-free Gaussian elimination over the rationals."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


@dataclass(frozen=True)
class Solution:
    """Outcome of :func:`solve_exact`.

    When ``consistent`` is false, ``values`` is empty and ``bad_row`` is the index
    (in the caller's row order) of an equation that contradicts the others.
    """

    consistent: bool
    values: tuple[Fraction, ...] = ()
    free: frozenset[int] = frozenset()
    rank: int = 0
    bad_row: int | None = None


def _integer_row(row: Sequence, rhs) -> list[int]:
    entries = [Fraction(x) for x in row] + [Fraction(rhs)]
    scale = 1
    for e in entries:
        scale = math.lcm(scale, e.denominator)
    return [int(e * scale) for e in entries]


def solve_exact(A: Sequence[Sequence], b: Sequence) -> Solution:
    """Solve A x = b exactly.

    Rows are cleared of denominators and reduced to echelon form by Bareiss'
    one-step fraction-free elimination, so every intermediate entry is an integer
    minor of the augmented matrix. Free variables are set to zero.
    """
    if len(A) != len(b):
        raise ValueError("row count mismatch between A and b")
    ncols = len(A[0]) if A else 0
    rows = [_integer_row(r, rhs) for r, rhs in zip(A, b)]
    if any(len(r) != ncols + 1 for r in rows):
        raise ValueError("ragged matrix")
    origin = list(range(len(rows)))

    pivots: list[int] = []
    r = 0
    prev = 1
    for c in range(ncols):
        if r == len(rows):
            break
        piv = None
        best = None
        for i in range(r, len(rows)):
            v = rows[i][c]
            # smallest nonzero pivot keeps the minors from growing needlessly
            if v and (best is None or abs(v) < best):
                piv, best = i, abs(v)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        origin[r], origin[piv] = origin[piv], origin[r]
        p = rows[r][c]
        pr = rows[r]
        for i in range(r + 1, len(rows)):
            ri = rows[i]
            a = ri[c]
            rows[i] = [(p * ri[j] - a * pr[j]) // prev if j >= c else 0 for j in range(ncols + 1)]
        # rows above the pivot row keep their scale; only the trailing block shares ``prev``
        prev = p
        pivots.append(c)
        r += 1

    for i in range(r, len(rows)):
        if rows[i][ncols] != 0:
            return Solution(False, rank=r, bad_row=origin[i])

    x = [Fraction(0)] * ncols
    for i in range(r - 1, -1, -1):
        c = pivots[i]
        row = rows[i]
        acc = Fraction(row[ncols])
        for j in range(c + 1, ncols):
            if row[j]:
                acc -= row[j] * x[j]
        x[c] = acc / row[c]
    free = frozenset(range(ncols)) - frozenset(pivots)
    return Solution(True, tuple(x), free, r)
