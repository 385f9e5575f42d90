"""Brute-force exact evaluation of the binomial sums.

Every other module is checked against these functions, so they stay as literal
as possible: plain loops over the index ranges, exact integers throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .exactmath import binomial


class Family(str, Enum):
    FULL_SQUARE = "full-square"
    TRIANGLE = "triangle"
    SINGLE_PLAIN = "single-plain"
    SINGLE_SQUARED = "single-squared"


@dataclass(frozen=True)
class SumSpec:
    """One instance of sum_{i,j=-n..n} |i^s j^t (i^k - j^k)^beta| C(2n,n+i) C(2n,n+j).

    ``k`` is the literal exponent inside the absolute value (k=3 means |i^3 - j^3|).
    """

    s: int = 0
    t: int = 0
    k: int = 1
    beta: int = 1
    family: Family = Family.FULL_SQUARE

    def __post_init__(self):
        if min(self.s, self.t, self.k, self.beta) < 0:
            raise ValueError(f"exponents must be non-negative: {self}")
        if self.family == Family.FULL_SQUARE and self.k < 1:
            raise ValueError("full-square sums need k >= 1")

    def as_dict(self) -> dict:
        return {"s": self.s, "t": self.t, "k": self.k, "beta": self.beta}


def _ipow(x: int, e: int) -> int:
    # Python already has 0**0 == 1
    return x**e


@lru_cache(maxsize=4096)
def _row(n: int) -> tuple[int, ...]:
    return tuple(binomial(2 * n, n + i) for i in range(-n, n + 1))


def full_square_sum(spec: SumSpec, n: int) -> int:
    if n < 0:
        raise ValueError("n must be non-negative")
    s, t, k, beta = spec.s, spec.t, spec.k, spec.beta
    row = _row(n)
    ipows = [(_ipow(i, s), _ipow(i, t), _ipow(i, k)) for i in range(-n, n + 1)]
    total = 0
    for jj in range(2 * n + 1):
        jt, jk = ipows[jj][1], ipows[jj][2]
        if jt == 0:
            continue
        inner = 0
        for ii in range(2 * n + 1):
            is_, _, ik = ipows[ii]
            if is_ == 0 or (beta and ik == jk):
                continue
            inner += abs(is_ * jt * (ik - jk) ** beta) * row[ii]
        total += inner * row[jj]
    return total


def full_square_sum_two(spec: SumSpec, n: int, m: int) -> int:
    """Same summand with C(2n,n+i) C(2m,m+j): i over [-n, n], j over [-m, m]."""
    s, t, k, beta = spec.s, spec.t, spec.k, spec.beta
    rown, rowm = _row(n), _row(m)
    total = 0
    for jj, j in enumerate(range(-m, m + 1)):
        jt, jk = _ipow(j, t), _ipow(j, k)
        inner = 0
        for ii, i in enumerate(range(-n, n + 1)):
            inner += abs(_ipow(i, s) * jt * (_ipow(i, k) - jk) ** beta) * rown[ii]
        total += inner * rowm[jj]
    return total


def triangle_sum(s: int, t: int, n: int, m: int) -> int:
    """sum_{0<=i<=j} i^s j^t C(2n,n+i) C(2m,m+j); i runs to n, j to m."""
    total = 0
    for j in range(0, m + 1):
        cj = _ipow(j, t) * binomial(2 * m, m + j)
        if cj == 0:
            continue
        inner = 0
        for i in range(0, min(j, n) + 1):
            inner += _ipow(i, s) * binomial(2 * n, n + i)
        total += inner * cj
    return total


def single_sum(power: int, squared: bool, n: int) -> int:
    """sum_{j=1..n} j^power C(2n,n+j), or with the binomial squared."""
    e = 2 if squared else 1
    return sum(j**power * binomial(2 * n, n + j) ** e for j in range(1, n + 1))
