"""Exact checks of the two-parameter inequality

    sum_{i,j} |j^2 - i^2| C(2n, n+i) C(2m, m+j) >= 2nm C(2n, n) C(2m, m),

with equality iff m = n, together with the identities used to prove it.

Binomials with upper index 2n-2 or 2m-2 occur at n = 0 or m = 0; they are taken
to be zero there (see :func:`absbinom.exactmath.binomial0`).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exactmath import binomial, binomial0
from .oracle import SumSpec, full_square_sum, full_square_sum_two

_ABS_SQUARE_DIFF = SumSpec(0, 0, 2, 1)
HALF = Fraction(1, 2)


def alpha(flag: bool) -> Fraction:
    """Boundary weight: 1/2 on the boundary, 1 elsewhere."""
    return HALF if flag else Fraction(1)


@dataclass
class InequalityReport:
    bound: int
    violations: list[tuple[int, int]] = field(default_factory=list)
    equality_set: list[tuple[int, int]] = field(default_factory=list)
    skipped: list[tuple[int, int]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def equality_on_diagonal_only(self) -> bool:
        diag = [(m, m) for m in range(self.bound + 1)]
        return sorted(self.equality_set) == diag


def inequality_sides(m: int, n: int) -> tuple[int, int]:
    lhs = full_square_sum_two(_ABS_SQUARE_DIFF, n, m)
    rhs = 2 * n * m * binomial(2 * n, n) * binomial(2 * m, m)
    return lhs, rhs


def theorem_inequality_check(max_: int) -> InequalityReport:
    report = InequalityReport(max_)
    for m in range(max_ + 1):
        for n in range(max_ + 1):
            lhs, rhs = inequality_sides(m, n)
            if lhs < rhs:
                report.violations.append((m, n))
            elif lhs == rhs:
                report.equality_set.append((m, n))
    return report


# ---------------------------------------------------------------- decomposition


def quarter_sum(n: int, m: int) -> Fraction:
    """sum_{i,j>=0} alpha(i=0) alpha(j=0) |j^2 - i^2| C(2n,n+i) C(2m,m+j)."""
    acc = Fraction(0)
    for i in range(n + 1):
        ci = binomial(2 * n, n + i)
        for j in range(m + 1):
            if i != j:
                acc += alpha(i == 0) * alpha(j == 0) * abs(j * j - i * i) * ci * binomial(2 * m, m + j)
    return acc


def _pairs(n: int, m: int):
    top = max(n, m) + 1
    for j in range(1, top + 1):
        for i in range(j):
            yield i, j


def shifted_difference(n: int, m: int) -> Fraction:
    """sum_{0<=i<j} alpha(i=0) (C(2n,n+i) C(2m-2,m+j-1) - C(2n-2,n+j-1) C(2m,m+i))."""
    acc = Fraction(0)
    for i, j in _pairs(n, m):
        term = binomial(2 * n, n + i) * binomial0(2 * m - 2, m + j - 1) - binomial0(
            2 * n - 2, n + j - 1
        ) * binomial(2 * m, m + i)
        if term:
            acc += alpha(i == 0) * term
    return acc


def antisymmetric_difference(n: int, m: int) -> Fraction:
    """sum_{0<=i<j} alpha(i=0) (C(2n,n+i) C(2m,m+j) - C(2n,n+j) C(2m,m+i))."""
    acc = Fraction(0)
    for i, j in _pairs(n, m):
        term = binomial(2 * n, n + i) * binomial(2 * m, m + j) - binomial(2 * n, n + j) * binomial(
            2 * m, m + i
        )
        if term:
            acc += alpha(i == 0) * term
    return acc


def decomposition_identity_check(n: int, m: int) -> bool:
    lhs = quarter_sum(n, m)
    rhs = Fraction(n * m, 2) * binomial(2 * n, n) * binomial(2 * m, m) + 2 * (m - n) * shifted_difference(n, m)
    return lhs == rhs


def gosper_identity_check(n: int, m: int) -> bool | None:
    """Check the telescoped identity; ``None`` at m = n = 0 where it divides by m + n."""
    if m + n == 0:
        return None
    lhs = -4 * shifted_difference(n, m) + antisymmetric_difference(n, m)
    rhs = -Fraction(m - n, 4 * (m + n)) * binomial(2 * n, n) * binomial(2 * m, m)
    return lhs == rhs


# ---------------------------------------------------------------- termwise ratio


def termwise_sides(n: int, m: int, i: int, j: int) -> tuple[int, int]:
    left = binomial(2 * n, n + i) * binomial0(2 * m - 2, m + j - 1)
    right = binomial0(2 * n - 2, n + j - 1) * binomial(2 * m, m + i)
    return left, right


def termwise_violations(max_: int) -> list[tuple[int, int, int, int]]:
    """Cells (n, m, i, j), m >= n, i < j, breaking the termwise lemma.

    A cell breaks it when left < right, when m = n and the sides differ, or when
    m > n and the sides agree on a nonzero value. Cells where both sides are 0
    (binomials out of range) satisfy the inequality and carry no equality claim.
    """
    bad = []
    for n in range(max_ + 1):
        for m in range(n, max_ + 1):
            for j in range(1, max_ + 1):
                for i in range(j):
                    left, right = termwise_sides(n, m, i, j)
                    if left < right:
                        bad.append((n, m, i, j))
                    elif left == right and m != n and left != 0:
                        bad.append((n, m, i, j))
                    elif m == n and left != right:
                        bad.append((n, m, i, j))
    return bad


def termwise_ratio_check(max_: int) -> bool:
    return not termwise_violations(max_)


def symmetry_reduction_check(n: int) -> bool:
    """4 * quarter_sum(n, n) equals the full-square sum of |j^2 - i^2|."""
    return 4 * quarter_sum(n, n) == full_square_sum(_ABS_SQUARE_DIFF, n)
