"""Exact integer/rational arithmetic: binomials, Pochhammer symbols, polynomials in n.

Rationals are :class:`fractions.Fraction` (aliased ``BigRat``); they are always
kept in lowest terms with a positive denominator, which is all the engine needs.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

BigRat = Fraction
Number = Union[int, Fraction]


class ExactMathError(ValueError):
    """Raised for inputs outside the exact-arithmetic contracts.

    ``code`` is a short machine-readable tag such as ``"pochhammer-pole"``.
    """

    def __init__(self, code: str, message: str = ""):
        super().__init__(f"{code}: {message}" if message else code)
        self.code = code


def binomial(n: int, k: int) -> int:
    """C(n, k) for n >= 0, zero outside 0 <= k <= n."""
    if n < 0:
        raise ExactMathError("unsupported-negative-upper", f"C({n}, {k})")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def binomial0(n: int, k: int) -> int:
    """Like :func:`binomial`, but a negative upper index also yields 0.

    Only for sums whose degenerate cells are defined to vanish (e.g. C(2n-2, .) at n=0).
    """
    if n < 0:
        return 0
    return binomial(n, k)


def zero_power(e: int) -> int:
    """0**e with 0**0 = 1."""
    return 1 if e == 0 else 0


def pochhammer(alpha: Number, m: int) -> Fraction:
    """Rising factorial (alpha)_m, extended to negative m by 1/((alpha-1)...(alpha+m))."""
    alpha = Fraction(alpha)
    if m >= 0:
        acc = Fraction(1)
        for r in range(m):
            acc *= alpha + r
        return acc
    den = Fraction(1)
    for r in range(1, -m + 1):
        den *= alpha - r
    if den == 0:
        raise ExactMathError("pochhammer-pole", f"({alpha})_{m}")
    return 1 / den


class Poly:
    """Immutable univariate polynomial in n with rational coefficients.

    ``coeffs[i]`` is the coefficient of n**i; trailing zeros are stripped so the
    zero polynomial has ``coeffs == ()``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def monomial(cls, degree: int, coeff: Number = 1) -> "Poly":
        return cls([0] * degree + [coeff])

    @classmethod
    def from_roots(cls, roots: Sequence[Number], lead: Number = 1) -> "Poly":
        p = cls([lead])
        for r in roots:
            p = p * cls([-Fraction(r), 1])
        return p

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, n: Number) -> Fraction:
        return poly_eval(self, n)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({[str(c) for c in self.coeffs]})"

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __add__(self, other) -> "Poly":
        other = _as_poly(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        res = list(a)
        for i, c in enumerate(b):
            res[i] += c
        return Poly(res)

    __radd__ = __add__

    def __sub__(self, other) -> "Poly":
        return self + (-_as_poly(other))

    def __rsub__(self, other) -> "Poly":
        return _as_poly(other) - self

    def __mul__(self, other) -> "Poly":
        other = _as_poly(other)
        if self.is_zero() or other.is_zero():
            return Poly()
        res = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    res[i + j] += a * b
        return Poly(res)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Poly":
        res = Poly([1])
        for _ in range(e):
            res = res * self
        return res

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        lead = other.coeffs[-1]
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly(), self
        quot = [Fraction(0)] * (dq + 1)
        for i in range(dq, -1, -1):
            q = rem[i + other.degree] / lead
            quot[i] = q
            if q:
                for j, c in enumerate(other.coeffs):
                    rem[i + j] -= q * c
        return Poly(quot), Poly(rem)


def _as_poly(x) -> Poly:
    if isinstance(x, Poly):
        return x
    return Poly([x])


def poly_eval(p: Poly, n: Number) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * n + c
    return acc


def poly_interpolate(points: Sequence[tuple[Number, Number]]) -> Poly:
    """Unique polynomial of degree < len(points) through the points (Newton form)."""
    xs = [Fraction(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ExactMathError("duplicate-node", "interpolation abscissae must be distinct")
    table = [Fraction(y) for _, y in points]
    npts = len(xs)
    # divided differences in place: table[i] becomes f[x_0..x_i]
    for level in range(1, npts):
        for i in range(npts - 1, level - 1, -1):
            table[i] = (table[i] - table[i - 1]) / (xs[i] - xs[i - level])
    result = Poly()
    for i in range(npts - 1, -1, -1):
        result = result * Poly([-xs[i], 1]) + table[i]
    return result
