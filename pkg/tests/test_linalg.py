from fractions import Fraction

from hypothesis import given, strategies as st

from absbinom.linalg import solve_exact


def test_unique_solution():
    sol = solve_exact([[2, 1], [1, 3]], [3, 5])
    assert sol.consistent and not sol.free
    assert tuple(sol.values) == (Fraction(4, 5), Fraction(7, 5))


def test_rational_entries():
    sol = solve_exact([[Fraction(1, 2), Fraction(1, 3)], [Fraction(1, 4), 1]], [1, 2])
    x, y = sol.values
    assert Fraction(1, 2) * x + Fraction(1, 3) * y == 1
    assert Fraction(1, 4) * x + y == 2


def test_inconsistent_reports_row():
    sol = solve_exact([[1, 1], [2, 2], [1, 2]], [1, 3, 0])
    assert not sol.consistent
    assert sol.bad_row == 1


def test_free_variables_set_to_zero():
    sol = solve_exact([[1, 1, 0], [2, 2, 0]], [4, 8])
    assert sol.consistent
    assert len(sol.free) == 2
    assert all(sol.values[i] == 0 for i in sol.free)
    assert sol.values[0] + sol.values[1] == 4


matrices = st.integers(1, 5).flatmap(
    lambda n: st.lists(
        st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=n, max_size=n + 3
    )
)


@given(matrices, st.data())
def test_consistent_systems_are_solved(A, data):
    n = len(A[0])
    x = data.draw(st.lists(st.fractions(max_denominator=20), min_size=n, max_size=n))
    b = [sum(Fraction(a) * v for a, v in zip(row, x)) for row in A]
    sol = solve_exact(A, b)
    assert sol.consistent
    for row, rhs in zip(A, b):
        assert sum(a * v for a, v in zip(row, sol.values)) == rhs
