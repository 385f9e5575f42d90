"""Closed-form evaluators for the fundamental triangle sums and the single sums.

The four fundamental sums are

    sum_{0<=i<=j} i^a j^b C(2n, n+i) C(2m, m+j),   a, b in {0, 1},

for independent n, m >= 0. Each right-hand side contains l-sums whose upper
limit may fall below the lower one; those go through :func:`signed_sum`, which
is what lets one formula serve both n >= m and n < m.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .exactmath import binomial, pochhammer, poly_eval, zero_power
from .expansion import expansion_coeffs

Term = Callable[[int], "int | Fraction"]


@dataclass(frozen=True)
class SignedRange:
    """Index range [lower, upper_exclusive), read backwards with a sign flip if reversed."""

    lower: int
    upper_exclusive: int


def signed_sum(rng: SignedRange, term: Term) -> Fraction:
    M, N = rng.lower, rng.upper_exclusive
    if N > M:
        return Fraction(sum(term(k) for k in range(M, N)))
    if N == M:
        return Fraction(0)
    return -Fraction(sum(term(k) for k in range(N, M)))


def _pow2(e: int) -> Fraction:
    return Fraction(2) ** e


def _integral(x: Fraction, what: str) -> Fraction:
    if x.denominator != 1:
        raise ArithmeticError(f"{what} evaluated to non-integer {x}")
    return x


def _ell_sum_main(n: int, m: int) -> Fraction:
    """sum_{l=0}^{n-m} C(2n-2l, n-l) C(2m+2l, m+l)."""
    return signed_sum(
        SignedRange(0, n - m + 1),
        lambda l: binomial(2 * n - 2 * l, n - l) * binomial(2 * m + 2 * l, m + l),
    )


def _ell_sum_shift_n(n: int, m: int) -> Fraction:
    """sum_{l=0}^{n-m-1} C(2n-2l-2, n-l-1) C(2m+2l, m+l)."""
    return signed_sum(
        SignedRange(0, n - m),
        lambda l: binomial(2 * n - 2 * l - 2, n - l - 1) * binomial(2 * m + 2 * l, m + l),
    )


def _ell_sum_shift_m(n: int, m: int) -> Fraction:
    """sum_{l=0}^{n-m+1} C(2n-2l, n-l) C(2m+2l-2, m+l-1)."""
    return signed_sum(
        SignedRange(0, n - m + 2),
        lambda l: binomial(2 * n - 2 * l, n - l) * binomial(2 * m + 2 * l - 2, m + l - 1),
    )


def fundamental_S00(n: int, m: int) -> Fraction:
    val = (
        _pow2(2 * n + 2 * m - 3)
        + Fraction(binomial(2 * n + 2 * m, n + m), 4)
        + Fraction(binomial(2 * n, n) * binomial(2 * m, m), 2)
        + _pow2(2 * m - 2) * binomial(2 * n, n)
        - _ell_sum_main(n, m) / 8
    )
    return _integral(val, f"S00({n},{m})")


def fundamental_S10(n: int, m: int) -> Fraction:
    if n == 0:
        return Fraction(0)
    val = (
        -Fraction(n, 4) * binomial(2 * n + 2 * m, n + m)
        + n * _pow2(2 * m - 2) * binomial(2 * n, n)
        + Fraction(n, 8) * _ell_sum_main(n, m)
        - Fraction(n, 2) * _ell_sum_shift_n(n, m)
    )
    return _integral(val, f"S10({n},{m})")


def fundamental_S01(n: int, m: int) -> Fraction:
    # every term carries the factor m; C(2m-2, .) is undefined at m = 0
    if m == 0:
        return Fraction(0)
    val = (
        Fraction(m, 4) * binomial(2 * n + 2 * m, n + m)
        + m * binomial(2 * n, n) * binomial(2 * m - 2, m - 2)
        - Fraction(m, 8) * _ell_sum_main(n, m)
        + Fraction(m, 2) * _ell_sum_shift_m(n, m)
    )
    return _integral(val, f"S01({n},{m})")


def fundamental_S11(n: int, m: int) -> Fraction:
    if n == 0 or m == 0:
        return Fraction(0)
    mn = m * n
    val = (
        Fraction(mn, 2) * binomial(2 * n + 2 * m - 2, n + m - 1)
        - Fraction(mn, 2) * binomial(2 * n + 2 * m - 2, n + m - 2)
        + Fraction(mn, 8) * _ell_sum_main(n, m)
        - Fraction(mn, 2) * _ell_sum_shift_n(n, m)
    )
    return _integral(val, f"S11({n},{m})")


FUNDAMENTAL = {
    "S00": fundamental_S00,
    "S10": fundamental_S10,
    "S01": fundamental_S01,
    "S11": fundamental_S11,
}

# (power of i, power of j) summed by each fundamental evaluator
FUNDAMENTAL_EXPONENTS = {"S00": (0, 0), "S10": (1, 0), "S01": (0, 1), "S11": (1, 1)}


# ---------------------------------------------------------------- single sums
# Terms whose Pochhammer prefactor vanishes (b > n) are skipped: their binomials
# would otherwise have negative arguments.


def single_even_plain(k: int, n: int) -> Fraction:
    """sum_{j=1}^n j^(2k) C(2n, n+j)."""
    c = expansion_coeffs(k)
    acc = Fraction(0)
    for b in range(k + 1):
        pre = pochhammer(2 * n - 2 * b + 1, 2 * b)
        if pre:
            acc += poly_eval(c.coeffs[b], n) * pre * _pow2(-2 * b - 1)
    val = -Fraction(zero_power(2 * k), 2) * binomial(2 * n, n) + 4**n * acc
    return _integral(val, f"even-plain(k={k}, n={n})")


def single_odd_plain(k: int, n: int) -> Fraction:
    """sum_{j=1}^n j^(2k+1) C(2n, n+j)."""
    c = expansion_coeffs(k)
    acc = Fraction(0)
    for b in range(k + 1):
        acc += poly_eval(c.coeffs[b], n) * pochhammer(n - b, b + 1) * pochhammer(n - b + 1, b)
    return _integral(Fraction(binomial(2 * n, n), 2) * acc, f"odd-plain(k={k}, n={n})")


def single_even_squared(k: int, n: int) -> Fraction:
    """sum_{j=1}^n j^(2k) C(2n, n+j)^2."""
    c = expansion_coeffs(k)
    acc = Fraction(0)
    for b in range(k + 1):
        pre = pochhammer(2 * n - 2 * b + 1, 2 * b)
        if pre:
            acc += poly_eval(c.coeffs[b], n) * pre * binomial(4 * n - 2 * b, 2 * n - b)
    val = -Fraction(zero_power(2 * k), 2) * binomial(2 * n, n) ** 2 + acc / 2
    return _integral(val, f"even-squared(k={k}, n={n})")


def single_odd_squared(k: int, n: int) -> Fraction:
    """sum_{j=1}^n j^(2k+1) C(2n, n+j)^2."""
    if n == 0:
        return Fraction(0)
    c = expansion_coeffs(k)
    acc = Fraction(0)
    for b in range(k + 1):
        pre = pochhammer(n - b, b + 1) * pochhammer(n - b + 1, b)
        if pre:
            acc += poly_eval(c.coeffs[b], n) * pre * Fraction(n, 2 * (2 * n - b))
    return _integral(acc * binomial(2 * n, n) ** 2, f"odd-squared(k={k}, n={n})")


SINGLE = {
    "even-plain": single_even_plain,
    "odd-plain": single_odd_plain,
    "even-squared": single_even_squared,
    "odd-squared": single_odd_squared,
}

# (power as a function of k, squared?) matched by each single-sum evaluator
SINGLE_SHAPE = {
    "even-plain": (lambda k: 2 * k, False),
    "odd-plain": (lambda k: 2 * k + 1, False),
    "even-squared": (lambda k: 2 * k, True),
    "odd-squared": (lambda k: 2 * k + 1, True),
}


# ---------------------------------------------------------------- classical identities


def chu_vandermonde_check(n: int, m: int) -> bool:
    lhs = sum(binomial(2 * m, m + i) * binomial(2 * n, n + i) for i in range(0, m + 1))
    rhs = Fraction(binomial(2 * m, m) * binomial(2 * n, n), 2) + Fraction(
        binomial(2 * m + 2 * n, m + n), 2
    )
    return lhs == rhs


def dixon_identity_check(n: int, b: int) -> bool:
    if n < 1 or not 0 <= b <= n - 1:
        raise ValueError("dixon_identity_check needs n >= 1 and 0 <= b <= n-1")
    lhs = sum(
        j * binomial(2 * n - 2 * b, n + j - b) * binomial(2 * n, n + j) for j in range(1, n + 1)
    )
    rhs = (
        Fraction(2 * n * (n - b), 2 * n - b)
        * binomial(2 * n - 2 * b - 1, n - b)
        * binomial(2 * n - 1, n)
    )
    return lhs == rhs
