import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from absbinom.closedform import (
    BasisTerm,
    ClosedForm,
    Kind,
    basis_value,
    denominator_value,
    eval_closed_form,
    form_from_json,
    form_to_json,
    make_form,
    odd_offsets,
    shifted_central4n,
    term_from_rational,
)
from absbinom.exactmath import Poly
from absbinom.oracle import SumSpec

from naive import C, prod

SPEC = SumSpec(0, 0, 3)


def test_basis_values_independent():
    for n in range(1, 12):
        assert basis_value(Kind.CENTRAL4N, n) == C(4 * n, 2 * n)
        assert basis_value(Kind.CENTRAL_SQ, n) == C(2 * n, n) ** 2
        assert basis_value(Kind.POW4CENTRAL, n) == 4**n * C(2 * n, n)
        assert basis_value(Kind.POW16, n) == 16**n


def test_denominators():
    assert odd_offsets(3) == (1, 3, 5)
    assert denominator_value(Kind.CENTRAL4N, (1, 3), 2) == 7 * 5
    assert denominator_value(Kind.CENTRAL_SQ, (1, 3), 2) == 3 * 1


def test_term_validation():
    with pytest.raises(ValueError):
        BasisTerm(Kind.POW16, Poly([1]), (1,))
    with pytest.raises(ValueError):
        BasisTerm(Kind.CENTRAL4N, Poly([1]), (1, 5))
    with pytest.raises(ValueError):
        ClosedForm(SPEC, (BasisTerm(Kind.POW16, Poly([1])), BasisTerm(Kind.POW16, Poly([2]))))


def test_evaluation_known_form():
    # 2n^2 C(2n,n)^2
    form = make_form(SumSpec(0, 0, 2), [BasisTerm(Kind.CENTRAL_SQ, Poly([0, 0, 2]))])
    assert eval_closed_form(form, 4) == 156800
    with pytest.raises(ValueError):
        eval_closed_form(form, 0)


@given(st.integers(0, 6), st.integers(1, 25))
def test_shifted_central4n(h, n):
    num, den = shifted_central4n(h)
    if 2 * n >= h:
        assert num(n) / den(n) * C(4 * n, 2 * n) == C(4 * n - h, 2 * n - h)


def test_term_from_rational():
    # 4n^2(5n-2)/(4n-1) * C(4n-1,2n-1) = 2n^2(5n-2)/(4n-1) * C(4n,2n)
    t = term_from_rational(Kind.CENTRAL4N, Poly([0, 0, -4, 10]), Poly([-1, 4]), 1)
    assert t.numerator == Poly([0, 0, -4, 10]) and t.denom_offsets == (1,)
    with pytest.raises(ValueError):
        term_from_rational(Kind.CENTRAL4N, Poly([1]), Poly([-3, 4]), 1)


def test_term_value_matches_naive():
    t = BasisTerm(Kind.CENTRAL4N, Poly([0, 0, -4, 10]), (1,))
    for n in range(1, 10):
        assert t.value(n) == Fraction(2 * n * n * (5 * n - 2), 4 * n - 1) * C(4 * n, 2 * n)
        assert t.value(n) == Fraction(4 * n * n * (5 * n - 2), 4 * n - 1) * C(4 * n - 1, 2 * n - 1)


def test_json_schema_shape():
    form = make_form(
        SumSpec(1, 1, 3, 3),
        [BasisTerm(Kind.POW4CENTRAL, Poly([Fraction(31, 1), Fraction(-7, 16)])),
         BasisTerm(Kind.CENTRAL4N, Poly([0, 1]), (1, 3))],
    )
    data = json.loads(form_to_json(form))
    assert data["spec"] == {"s": 1, "t": 1, "k": 3, "beta": 3}
    assert [t["kind"] for t in data["terms"]] == ["central4n", "pow4central"]
    assert data["terms"][1]["numerator"] == ["31/1", "-7/16"]
    assert data["terms"][0]["denom_offsets"] == [1, 3]


coeff = st.fractions(max_denominator=10**6).filter(lambda q: abs(q.numerator) < 10**30)


@st.composite
def forms(draw):
    terms = []
    for kind in draw(st.sets(st.sampled_from(list(Kind)), min_size=1)):
        depth = draw(st.integers(0, 4)) if kind in (Kind.CENTRAL4N, Kind.CENTRAL_SQ) else 0
        terms.append(BasisTerm(kind, Poly(draw(st.lists(coeff, max_size=8))), odd_offsets(depth)))
    return make_form(SumSpec(draw(st.integers(0, 5)), draw(st.integers(0, 5)), 3), terms)


@given(forms())
def test_json_round_trip(form):
    text = form_to_json(form)
    back = form_from_json(text)
    assert back == form
    assert form_to_json(back) == text
    for n in range(1, 21):
        assert eval_closed_form(back, n) == eval_closed_form(form, n)


def test_json_rejects_float_coefficients():
    bad = '{"spec": {"s": 0, "t": 0, "k": 3, "beta": 1}, "terms": [{"kind": "pow16", "numerator": [0.5], "denom_offsets": []}]}'
    with pytest.raises(ValueError):
        form_from_json(bad)


def test_denominator_never_vanishes():
    # 4n and 2n are even, offsets are odd
    for n in range(1, 40):
        assert denominator_value(Kind.CENTRAL4N, odd_offsets(9), n) != 0
        assert denominator_value(Kind.CENTRAL_SQ, odd_offsets(9), n) == prod(2 * n - d for d in odd_offsets(9))
