from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, strategies as st

from absbinom.exactmath import (
    ExactMathError,
    Poly,
    binomial,
    binomial0,
    pochhammer,
    poly_eval,
    poly_interpolate,
    zero_power,
)

from naive import lagrange_eval

small = st.integers(min_value=-20, max_value=20)
rat = st.fractions(max_denominator=50).filter(lambda q: abs(q.numerator) < 10**6)


def test_binomial_known_values():
    assert binomial(8, 4) == 70
    assert binomial(60, 30) == 118264581564861424
    assert binomial(5, 7) == 0
    assert binomial(5, -1) == 0


def test_binomial_negative_upper_rejected():
    with pytest.raises(ExactMathError) as err:
        binomial(-1, 0)
    assert err.value.code == "unsupported-negative-upper"


def test_binomial0_zero_convention():
    assert binomial0(-2, -1) == 0
    assert binomial0(4, 2) == 6


def test_zero_power():
    assert zero_power(0) == 1
    assert zero_power(3) == 0


@given(st.integers(0, 60), st.integers(-5, 65))
def test_binomial_matches_factorial_formula(n, k):
    want = factorial(n) // (factorial(k) * factorial(n - k)) if 0 <= k <= n else 0
    assert binomial(n, k) == want


@given(st.integers(1, 40), st.integers(1, 40))
def test_pascal_rule(n, k):
    assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


def test_pochhammer_positive_and_zero_length():
    assert pochhammer(3, 4) == 3 * 4 * 5 * 6
    assert pochhammer(Fraction(1, 2), 2) == Fraction(3, 4)
    assert pochhammer(7, 0) == 1
    # a factor hits zero
    assert pochhammer(-2, 4) == 0


def test_pochhammer_negative_length():
    # (a)_{-m} = 1 / ((a-1)(a-2)...(a-m))
    assert pochhammer(5, -2) == Fraction(1, 4 * 3)
    with pytest.raises(ExactMathError) as err:
        pochhammer(2, -3)
    assert err.value.code == "pochhammer-pole"


@given(st.integers(-10, 10), st.integers(0, 6), st.integers(0, 6))
def test_pochhammer_splits(a, m, r):
    assert pochhammer(a, m + r) == pochhammer(a, m) * pochhammer(a + m, r)


@given(st.integers(1, 30), st.integers(0, 30))
def test_pochhammer_is_factorial_ratio(a, m):
    assert pochhammer(a, m) == Fraction(factorial(a + m - 1), factorial(a - 1))


def test_poly_basics():
    p = Poly([1, 2, 3])
    assert p.degree == 2
    assert Poly([0, 0]).degree == -1
    assert Poly([1, 0, 0]) == Poly([1])
    assert p(2) == 1 + 4 + 12
    assert (p * Poly([0, 1])).coeffs == (0, 1, 2, 3)
    q, r = p.divmod(Poly([1, 1]))
    assert q * Poly([1, 1]) + r == p
    assert Poly.from_roots([1, 2]) == Poly([2, -3, 1])


@given(st.lists(rat, max_size=6), st.lists(rat, max_size=6), rat)
def test_poly_ring_laws_under_evaluation(a, b, x):
    p, q = Poly(a), Poly(b)
    assert poly_eval(p + q, x) == poly_eval(p, x) + poly_eval(q, x)
    assert poly_eval(p - q, x) == poly_eval(p, x) - poly_eval(q, x)
    assert poly_eval(p * q, x) == poly_eval(p, x) * poly_eval(q, x)


@given(st.lists(rat, min_size=1, max_size=7), st.lists(rat, min_size=1, max_size=4))
def test_poly_division_identity(a, b):
    p, d = Poly(a), Poly(b)
    if d.is_zero():
        return
    q, r = p.divmod(d)
    assert q * d + r == p
    assert r.degree < d.degree


@given(st.lists(st.tuples(small, rat), min_size=1, max_size=7, unique_by=lambda t: t[0]), small)
def test_interpolation_matches_lagrange(points, x):
    p = poly_interpolate(points)
    assert p.degree < len(points)
    assert poly_eval(p, x) == lagrange_eval(points, x)


def test_interpolation_recovers_polynomial():
    target = Poly([Fraction(-90), 668, -1952, 2800, -1960, 531])
    pts = [(n, target(n)) for n in range(1, 7)]
    assert poly_interpolate(pts) == target


def test_interpolation_duplicate_node():
    with pytest.raises(ExactMathError) as err:
        poly_interpolate([(1, 2), (1, 3)])
    assert err.value.code == "duplicate-node"


def test_central_binomial_growth_exact():
    # C(2n,n) for large n stays an exact integer
    assert binomial(2000, 1000) == comb(2000, 1000)


@pytest.mark.parametrize(
    "n,k,want", [(2, 1, 2), (4, 2, 6), (0, -1, 0)]
)
def test_binomial_examples(n, k, want):
    assert binomial(n, k) == want


def test_pochhammer_examples():
    assert pochhammer(Fraction(7, 3), 0) == 1
    assert pochhammer(3, 2) == 12
    assert pochhammer(3, -1) == Fraction(1, 2)


def test_poly_eval_examples():
    assert poly_eval(Poly(), 5) == 0
    assert poly_eval(Poly.monomial(2), 3) == 9
    p1 = Poly([-90, 668, -1952, 2800, -1960, 531])
    assert poly_eval(p1, 1) == 531 - 1960 + 2800 - 1952 + 668 - 90 == -3


def test_interpolate_examples():
    assert poly_interpolate([(0, 1), (1, 1)]) == Poly([1])
    assert poly_interpolate([(1, 1), (2, 4), (3, 9)]) == Poly.monomial(2)
    assert poly_interpolate([(n, n**4) for n in range(1, 6)]) == Poly.monomial(4)
