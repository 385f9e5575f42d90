"""LaTeX rendering of closed forms.

Coefficients are shown as content * n^v * (primitive integer polynomial) over a
product of primitive linear factors. The default output rewrites a lone
C(4n,2n) term with d denominator factors in terms of C(4n-d, 2n-d), the shifted
style common in the literature; ``canonical=True`` keeps the four-basis form.
"""

from __future__ import annotations

import math
from collections import Counter
from fractions import Fraction

from .closedform import ClosedForm, Kind
from .exactmath import Poly, poly_eval


def _primitive(p: Poly) -> tuple[Fraction, list[int]]:
    """(content, integer coefficients) with positive leading coefficient."""
    den = 1
    for c in p.coeffs:
        den = math.lcm(den, c.denominator)
    ints = [int(c * den) for c in p.coeffs]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    if ints[-1] < 0:
        g = -g
    return Fraction(g, den), [v // g for v in ints]


def _linear(a: int, b: int) -> tuple[Fraction, tuple[int, int]]:
    """a*n + b as const * (p*n + q) with p > 0 and gcd(p, q) = 1."""
    g = math.gcd(a, b)
    if a < 0:
        g = -g
    return Fraction(g), (a // g, b // g)


def _int_poly_latex(ints: list[int]) -> str:
    parts = []
    for d in range(len(ints) - 1, -1, -1):
        c = ints[d]
        if not c:
            continue
        mag = abs(c)
        coef = "" if (mag == 1 and d) else str(mag)
        mono = "" if d == 0 else ("n" if d == 1 else f"n^{{{d}}}" if d > 9 else f"n^{d}")
        parts.append(("-" if c < 0 else "+", coef + mono))
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f"{sign}{body}"
    return out


def _factor_latex(f: tuple[int, int]) -> str:
    p, q = f
    lead = "n" if p == 1 else f"{p}n"
    if q == 0:
        return lead
    return f"{lead}{'+' if q > 0 else '-'}{abs(q)}"


def _coefficient_latex(num: Poly, num_factors: list[tuple[int, int]],
                       den_factors: list[tuple[int, int]]) -> tuple[int, str]:
    """Render num * prod(num_factors) / prod(den_factors); returns (sign, body)."""
    const = Fraction(1)
    top: Counter = Counter()
    bot: Counter = Counter()
    for a, b in num_factors:
        c, f = _linear(a, b)
        const *= c
        top[f] += 1
    for a, b in den_factors:
        c, f = _linear(a, b)
        const /= c
        bot[f] += 1
    common = top & bot
    top -= common
    bot -= common
    # a denominator factor may also divide the polynomial numerator
    for f in list(bot.elements()):
        p, q = f
        root = Fraction(-q, p)
        if poly_eval(num, root) == 0:
            quo, _ = num.divmod(Poly([q, p]))
            num = quo
            bot[f] -= 1
    bot = +bot
    content, ints = _primitive(num)
    const *= content
    # pull n^v out of the polynomial
    v = 0
    while ints and ints[0] == 0:
        ints.pop(0)
        v += 1
    v += top.pop((1, 0), 0)
    sign = -1 if const < 0 else 1
    const = abs(const)

    mult = const.numerator
    poly_body = None
    if len(ints) == 1:
        mult *= ints[0]
    else:
        poly_body = _int_poly_latex(ints)
    pieces = []
    if mult != 1:
        pieces.append(str(mult))
    if v:
        pieces.append("n" if v == 1 else f"n^{v}")
    if poly_body:
        pieces.append(f"({poly_body})" if pieces or top else poly_body)
    for f in sorted(top.elements()):
        pieces.append(f"({_factor_latex(f)})")
    numer = "".join(pieces) or "1"

    dens = sorted(bot.elements(), key=lambda f: (f[0], -f[1]))
    den_parts = []
    if const.denominator != 1:
        den_parts.append(str(const.denominator))
    if len(dens) == 1 and not den_parts:
        den_parts.append(_factor_latex(dens[0]))
    else:
        den_parts.extend(f"({_factor_latex(f)})" for f in dens)
    if not den_parts:
        return sign, "" if numer == "1" else numer
    return sign, f"\\frac{{{numer}}}{{{''.join(den_parts)}}}"


def _basis_latex(kind: Kind, shift: int) -> str:
    if kind is Kind.CENTRAL4N:
        if shift:
            return f"\\binom{{4n-{shift}}}{{2n-{shift}}}"
        return "\\binom{4n}{2n}"
    if kind is Kind.CENTRAL_SQ:
        return "\\binom{2n}{n}^2"
    if kind is Kind.POW4CENTRAL:
        return "4^n\\binom{2n}{n}"
    return "16^n"


def emit_latex(form: ClosedForm, canonical: bool = False) -> str:
    terms = [t for t in form.terms if not t.numerator.is_zero()]
    if not terms:
        return "0"
    lone_4n = len(terms) == 1 and terms[0].kind is Kind.CENTRAL4N
    out = ""
    for idx, t in enumerate(terms):
        scale = 4 if t.kind is Kind.CENTRAL4N else 2
        dens = [(scale, -d) for d in t.denom_offsets]
        nums: list[tuple[int, int]] = []
        shift = 0
        if t.kind is Kind.CENTRAL4N and lone_4n and not canonical:
            shift = len(t.denom_offsets)
            # C(4n,2n) = prod(4n-r)/prod(2n-r) * C(4n-shift, 2n-shift)
            nums = [(4, -r) for r in range(shift)]
            dens = dens + [(2, -r) for r in range(shift)]
        sign, coef = _coefficient_latex(t.numerator, nums, dens)
        body = coef + _basis_latex(t.kind, shift)
        if idx == 0:
            out = ("-" if sign < 0 else "") + body
        else:
            out += (" - " if sign < 0 else " + ") + body
    return out

