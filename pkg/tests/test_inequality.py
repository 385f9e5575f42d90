from fractions import Fraction

import pytest

from absbinom.inequality import (
    alpha,
    antisymmetric_difference,
    decomposition_identity_check,
    gosper_identity_check,
    inequality_sides,
    quarter_sum,
    shifted_difference,
    symmetry_reduction_check,
    termwise_ratio_check,
    termwise_sides,
    termwise_violations,
    theorem_inequality_check,
)

import naive
from naive import C


def test_alpha():
    assert alpha(True) == Fraction(1, 2) and alpha(False) == 1


def test_sides_against_naive():
    for m in range(7):
        for n in range(7):
            lhs, rhs = inequality_sides(m, n)
            assert lhs == naive.abs_double_sum(0, 0, 2, 1, n, m)
            assert rhs == 2 * n * m * C(2 * n, n) * C(2 * m, m)


def test_small_range_report():
    rep = theorem_inequality_check(1)
    assert not rep.violations
    assert (0, 0) in rep.equality_set and (1, 1) in rep.equality_set


def test_strict_and_equal_examples():
    lhs, rhs = inequality_sides(2, 1)
    assert lhs > rhs
    assert inequality_sides(3, 3) == (7200, 7200) == (2 * 9 * C(6, 3) ** 2,) * 2


def test_equality_exactly_on_diagonal():
    rep = theorem_inequality_check(10)
    assert rep.passed
    assert rep.equality_on_diagonal_only()


def test_quarter_sum_naive():
    def q(n, m):
        return sum(
            (Fraction(1, 2) if i == 0 else 1) * (Fraction(1, 2) if j == 0 else 1)
            * abs(j * j - i * i) * C(2 * n, n + i) * C(2 * m, m + j)
            for i in range(n + 1)
            for j in range(m + 1)
        )

    for n in range(6):
        for m in range(6):
            assert quarter_sum(n, m) == q(n, m)


@pytest.mark.parametrize("n,m", [(1, 1), (1, 2), (2, 5), (4, 3), (7, 7), (12, 1)])
def test_decomposition_interior(n, m):
    assert decomposition_identity_check(n, m)


@pytest.mark.parametrize("n,m", [(1, 1), (1, 2), (2, 5), (5, 2), (9, 4)])
def test_gosper_interior(n, m):
    assert gosper_identity_check(n, m) is True


def test_gosper_skips_origin():
    assert gosper_identity_check(0, 0) is None


def test_decomposition_boundary_sides():
    # n = 0, m = 3 by hand: the quarter sum is 1/2 * (1*15 + 4*6 + 9*1) = 24,
    # D(0,3) = 1/2 * (C(4,3) + C(4,4)) = 5/2 since C(-2, .) = 0, so the right
    # side is 0 + 2*3*5/2 = 15
    assert quarter_sum(0, 3) == 24
    assert shifted_difference(0, 3) == Fraction(5, 2)
    assert decomposition_identity_check(0, 3) is False


def test_gosper_boundary_sides():
    # n = 0, m = 1: D = 0 and the antisymmetric part is 1/2 * C(2,2), while the
    # right side is -(1/4) * C(0,0) * C(2,1) = -1/2
    assert shifted_difference(0, 1) == 0
    assert antisymmetric_difference(0, 1) == Fraction(1, 2)
    assert gosper_identity_check(0, 1) is False


def test_boundary_failures_are_exactly_the_axes():
    bad = {(n, m) for n in range(9) for m in range(9) if not decomposition_identity_check(n, m)}
    assert bad == {(0, m) for m in range(1, 9)} | {(n, 0) for n in range(1, 9)}


def test_termwise_examples():
    left, right = termwise_sides(2, 2, 0, 1)
    assert left == right == C(4, 2) * C(2, 2)
    assert termwise_ratio_check(8)
    assert termwise_violations(8) == []


def test_termwise_strict_off_diagonal():
    left, right = termwise_sides(2, 4, 1, 3)
    assert left == C(4, 3) * C(6, 6) and right == C(2, 4) * C(8, 5)
    assert left > right


@pytest.mark.parametrize("n", range(8))
def test_symmetry_reduction(n):
    assert symmetry_reduction_check(n)
