"""Closed forms over the four-function basis and their exact evaluation/serialisation.

A closed form is a sum of at most four terms

    numerator(n) / prod(4n - d) * C(4n, 2n)
    numerator(n) / prod(2n - d) * C(2n, n)^2
    numerator(n) * 4^n C(2n, n)
    numerator(n) * 16^n

with polynomial numerators in n and odd offsets d = 1, 3, 5, ...
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence

from .exactmath import Poly, binomial, poly_eval
from .oracle import SumSpec


class Kind(str, Enum):
    CENTRAL4N = "central4n"
    CENTRAL_SQ = "centralSq"
    POW4CENTRAL = "pow4central"
    POW16 = "pow16"


KIND_ORDER = (Kind.CENTRAL4N, Kind.CENTRAL_SQ, Kind.POW4CENTRAL, Kind.POW16)

# leading coefficient of the linear denominator factors, per kind
_DENOM_SCALE = {Kind.CENTRAL4N: 4, Kind.CENTRAL_SQ: 2}


def odd_offsets(depth: int) -> tuple[int, ...]:
    return tuple(range(1, 2 * depth, 2))


def basis_value(kind: Kind, n: int) -> int:
    if kind is Kind.CENTRAL4N:
        return binomial(4 * n, 2 * n)
    if kind is Kind.CENTRAL_SQ:
        return binomial(2 * n, n) ** 2
    if kind is Kind.POW4CENTRAL:
        return 4**n * binomial(2 * n, n)
    return 16**n


def denominator_value(kind: Kind, offsets: Sequence[int], n: int) -> int:
    a = _DENOM_SCALE.get(kind)
    acc = 1
    for d in offsets:
        acc *= a * n - d
    return acc


def denominator_poly(kind: Kind, offsets: Sequence[int]) -> Poly:
    a = _DENOM_SCALE.get(kind, 1)
    p = Poly([1])
    for d in offsets:
        p = p * Poly([-d, a])
    return p


@dataclass(frozen=True)
class BasisTerm:
    kind: Kind
    numerator: Poly
    denom_offsets: tuple[int, ...] = ()

    def __post_init__(self):
        offs = tuple(self.denom_offsets)
        object.__setattr__(self, "kind", Kind(self.kind))
        object.__setattr__(self, "denom_offsets", offs)
        if offs and self.kind not in _DENOM_SCALE:
            raise ValueError(f"{self.kind.value} terms carry no denominator")
        if offs and offs != odd_offsets(len(offs)):
            raise ValueError(f"denominator offsets must be 1, 3, 5, ...: {offs}")

    def value(self, n: int) -> Fraction:
        num = poly_eval(self.numerator, n)
        if not num:
            return Fraction(0)
        return num * basis_value(self.kind, n) / denominator_value(self.kind, self.denom_offsets, n)


@dataclass(frozen=True)
class ClosedForm:
    spec: SumSpec
    terms: tuple[BasisTerm, ...] = field(default_factory=tuple)

    def __post_init__(self):
        terms = tuple(self.terms)
        kinds = [t.kind for t in terms]
        if len(kinds) != len(set(kinds)):
            raise ValueError("closed form has repeated basis kinds")
        object.__setattr__(self, "terms", terms)

    def term(self, kind: Kind) -> BasisTerm | None:
        for t in self.terms:
            if t.kind is Kind(kind):
                return t
        return None

    def numerator(self, kind: Kind) -> Poly:
        t = self.term(kind)
        return t.numerator if t else Poly()

    def nonzero_kinds(self) -> set[Kind]:
        return {t.kind for t in self.terms if not t.numerator.is_zero()}

    def pruned(self) -> "ClosedForm":
        return ClosedForm(self.spec, tuple(t for t in self.terms if not t.numerator.is_zero()))


def eval_closed_form(form: ClosedForm, n: int) -> Fraction:
    if n < 1:
        raise ValueError("closed forms are evaluated at n >= 1")
    return sum((t.value(n) for t in form.terms), Fraction(0))


def term_from_rational(kind: Kind, num: Poly, den: Poly, depth: int) -> BasisTerm:
    """Rewrite num/den * basis as a term whose denominator is the first ``depth`` odd factors.

    Raises ``ValueError`` when num/den * prod(a n - d) is not a polynomial.
    """
    offs = odd_offsets(depth) if kind in _DENOM_SCALE else ()
    q, r = (num * denominator_poly(kind, offs)).divmod(den)
    if not r.is_zero():
        raise ValueError(f"{kind.value}: rational coefficient does not fit denominator depth {depth}")
    return BasisTerm(kind, q, offs)


def shifted_central4n(h: int) -> tuple[Poly, Poly]:
    """(num, den) with C(4n-h, 2n-h) = num/den * C(4n, 2n) as rational functions of n."""
    num, den = Poly([1]), Poly([1])
    for r in range(h):
        num = num * Poly([-r, 2])
        den = den * Poly([-r, 4])
    return num, den


# ---------------------------------------------------------------- JSON


def _rat_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _parse_rat(s: str) -> Fraction:
    if not isinstance(s, str):
        raise ValueError(f"rational must be a string, got {s!r}")
    return Fraction(s)


def form_to_dict(form: ClosedForm) -> dict:
    return {
        "spec": form.spec.as_dict(),
        "terms": [
            {
                "kind": t.kind.value,
                "numerator": [_rat_str(c) for c in t.numerator.coeffs],
                "denom_offsets": list(t.denom_offsets),
            }
            for t in form.terms
        ],
    }


def form_from_dict(data: dict) -> ClosedForm:
    sp = data["spec"]
    spec = SumSpec(int(sp["s"]), int(sp["t"]), int(sp["k"]), int(sp.get("beta", 1)))
    terms = tuple(
        BasisTerm(
            Kind(t["kind"]),
            Poly(_parse_rat(c) for c in t["numerator"]),
            tuple(int(d) for d in t.get("denom_offsets", ())),
        )
        for t in data["terms"]
    )
    return ClosedForm(spec, terms)


def form_to_json(form: ClosedForm) -> str:
    return json.dumps(form_to_dict(form), sort_keys=True)


def form_from_json(text: str) -> ClosedForm:
    return form_from_dict(json.loads(text))


def make_form(spec: SumSpec, terms: Iterable[BasisTerm]) -> ClosedForm:
    order = {k: i for i, k in enumerate(KIND_ORDER)}
    return ClosedForm(spec, tuple(sorted(terms, key=lambda t: order[t.kind])))
