"""Expansion of i^(2S) in the basis prod_{r<a} ((n - r)^2 - i^2).

    i^(2S) = sum_{a=0..S} c_{a,S}(n) * (n^2 - i^2)((n-1)^2 - i^2) ... ((n-a+1)^2 - i^2)

Each c_{a,S}(n) is a polynomial of degree 2S - 2a. The leading coefficient
c_{S,S} is (-1)^S, as forced by comparing the i^(2S) terms on both sides.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exactmath import Poly, poly_eval, poly_interpolate


@dataclass(frozen=True)
class ExpansionTable:
    S: int
    coeffs: tuple[Poly, ...]

    def coeff(self, a: int) -> Poly:
        return self.coeffs[a]

    def at(self, n: int) -> list[Fraction]:
        return [poly_eval(c, n) for c in self.coeffs]


def falling_square_product(a: int, i: int, n: int) -> int:
    """prod_{r=0}^{a-1} ((n - r)^2 - i^2)."""
    acc = 1
    for r in range(a):
        acc *= (n - r) ** 2 - i * i
    return acc


def _solve_at(S: int, n: int) -> list[Fraction]:
    # substituting i = n - a kills every basis product of index > a
    c: list[Fraction] = []
    for a in range(S + 1):
        i = n - a
        acc = Fraction(i ** (2 * S))
        for b in range(a):
            acc -= c[b] * falling_square_product(b, i, n)
        c.append(acc / falling_square_product(a, i, n))
    return c


@lru_cache(maxsize=None)
def expansion_coeffs(S: int) -> ExpansionTable:
    if S < 0:
        raise ValueError("S must be non-negative")
    # nodes n = S+1, S+2, ... keep i = n - a >= 1 and every pivot nonzero
    nodes = range(S + 1, S + 2 + 2 * S)
    samples = {n: _solve_at(S, n) for n in nodes}
    coeffs = []
    for a in range(S + 1):
        pts = [(n, samples[n][a]) for n in nodes[: 2 * S - 2 * a + 1]]
        coeffs.append(poly_interpolate(pts))
    return ExpansionTable(S, tuple(coeffs))


def expansion_check(table: ExpansionTable, i: int, n: int) -> bool:
    rhs = sum(
        (poly_eval(c, n) * falling_square_product(a, i, n) for a, c in enumerate(table.coeffs)),
        Fraction(0),
    )
    return rhs == i ** (2 * table.S)


def poly_latex(p: Poly, var: str = "n") -> str:
    if p.is_zero():
        return "0"
    parts = []
    for d in range(p.degree, -1, -1):
        c = p.coeffs[d]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if mag.denominator != 1:
            num = f"\\frac{{{mag.numerator}}}{{{mag.denominator}}}"
        elif mag == 1 and d:
            num = ""
        else:
            num = str(mag.numerator)
        mono = "" if d == 0 else (var if d == 1 else f"{var}^{{{d}}}" if d > 9 else f"{var}^{d}")
        parts.append((sign, num + mono))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def table_latex(table: ExpansionTable) -> str:
    lines = [f"c_{{{a},{table.S}}}(n) = {poly_latex(c)}" for a, c in enumerate(table.coeffs)]
    return "\n".join(lines)


def table_json(table: ExpansionTable) -> str:
    data = {
        "S": table.S,
        "coeffs": [[f"{c.numerator}/{c.denominator}" for c in p.coeffs] for p in table.coeffs],
    }
    return json.dumps(data, sort_keys=True)
