"""Ansatz fitting of closed forms over the four-function basis.

The procedure: pick which basis functions may appear, how many odd linear factors
sit under each, and a degree bound for each numerator; treat all numerator
coefficients as unknowns; equate the Ansatz to exact oracle values at
n = 1, 2, ...; solve exactly; confirm on fresh guard points.

Two degree plans exist. :func:`theorem_plan` is the table exactly as the
structure theorems state it. :func:`degree_plan` is the plan the fitter uses: it
agrees with the theorem table wherever that table is sufficient and widens it
(basis or denominator depth) in the parity cases where exact fits show the
stated shape cannot represent the sum. Every widening keeps the theorem's
Ansatz as a special case, so nothing the theorems allow is excluded.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Iterable, Mapping

from .closedform import (
    BasisTerm,
    ClosedForm,
    Kind,
    KIND_ORDER,
    basis_value,
    denominator_value,
    eval_closed_form,
    make_form,
    odd_offsets,
)
from .exactmath import Poly
from .linalg import solve_exact
from .oracle import Family, SumSpec, full_square_sum, triangle_sum

log = logging.getLogger(__name__)

GUARD_MARGIN = 3
GUARD_POINTS = 10
FIRST_N = 1


class Status(str, Enum):
    VERIFIED = "verified"
    INCONSISTENT = "inconsistent"
    UNDERDETERMINED_RESOLVED = "underdetermined-resolved"


class PlanError(ValueError):
    def __init__(self, code: str, message: str = ""):
        super().__init__(f"{code}: {message}" if message else code)
        self.code = code


@dataclass(frozen=True)
class KindPlan:
    degree: int
    depth: int = 0

    @property
    def offsets(self) -> tuple[int, ...]:
        return odd_offsets(self.depth)


@dataclass(frozen=True)
class DegreePlan:
    """Basis membership, numerator degree bound and denominator depth per kind.

    ``kinds`` maps each admitted kind to its :class:`KindPlan`; kinds not listed
    are asserted to vanish identically.
    """

    kinds: Mapping[Kind, KindPlan]
    case: str = ""

    def __post_init__(self):
        ordered = {k: self.kinds[k] for k in KIND_ORDER if k in self.kinds}
        object.__setattr__(self, "kinds", ordered)

    def unknown_count(self) -> int:
        return sum(p.degree + 1 for p in self.kinds.values())

    def as_table(self) -> dict[str, tuple[int, int]]:
        return {k.value: (p.degree, p.depth) for k, p in self.kinds.items()}


@dataclass(frozen=True)
class FitReport:
    form: ClosedForm
    fit_points: tuple[int, ...]
    guard_points: tuple[int, ...]
    status: Status
    plan: DegreePlan | None = None
    free: frozenset[tuple[str, int]] = frozenset()
    offending_n: int | None = None
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.status is not Status.INCONSISTENT


# ---------------------------------------------------------------- degree plans


def _split(spec: SumSpec) -> tuple[int, int, int, str]:
    """(S, T, theorem k, parity case label) for a spec."""
    S, T = spec.s // 2, spec.t // 2
    if spec.family == Family.TRIANGLE:
        kk = 0
    else:
        kk = spec.k // 2
    case = {(0, 0): "1", (1, 0): "2", (0, 1): "3", (1, 1): "4"}[(spec.s % 2, spec.t % 2)]
    return S, T, kk, case


def _check_plannable(spec: SumSpec) -> None:
    if spec.family == Family.TRIANGLE:
        return
    if spec.family != Family.FULL_SQUARE:
        raise PlanError("no-proved-degree-plan", f"family {spec.family.value}")
    if spec.beta != 1:
        raise PlanError("no-proved-degree-plan", f"beta={spec.beta}; use fit_generic")


def theorem_plan(spec: SumSpec) -> DegreePlan:
    """The degree/denominator table exactly as stated by the structure theorems."""
    _check_plannable(spec)
    S, T, k, case = _split(spec)
    x = S + T + k
    K4, SQ, P4, P16 = Kind.CENTRAL4N, Kind.CENTRAL_SQ, Kind.POW4CENTRAL, Kind.POW16
    if spec.family == Family.TRIANGLE:
        h = (S + T) // 2
        table = {
            "1": {K4: KindPlan(3 * S + 3 * T, S + T), SQ: KindPlan(2 * S + 2 * T + h, h),
                  P16: KindPlan(2 * S + 2 * T)},
            "2": {K4: KindPlan(3 * S + 3 * T + 1, S + T), SQ: KindPlan(2 * S + 2 * T + 1 + h, h),
                  P4: KindPlan(2 * S + 2 * T + 1)},
            "3": {K4: KindPlan(3 * S + 3 * T + 1, S + T), SQ: KindPlan(2 * S + 2 * T + 1 + h, h)},
            "4": {K4: KindPlan(3 * S + 3 * T + 2, S + T), SQ: KindPlan(2 * S + 2 * T + 2 + h, h)},
        }[case]
        if case == "1" and spec.s == 0:
            table[P4] = KindPlan(2 * T)
        return DegreePlan(table, f"triangle-{case}")
    h = x // 2
    if spec.k % 2 == 0:
        table = {
            "1": {SQ: KindPlan(2 * x + h, h)},
            "2": {SQ: KindPlan(2 * x + 1 + h, h), P4: KindPlan(2 * x + 1)},
            "3": {SQ: KindPlan(2 * x + 1 + h, h), P4: KindPlan(2 * x + 1)},
            "4": {SQ: KindPlan(2 * x + 2 + h, h)},
        }[case]
        return DegreePlan(table, f"even-{case}")
    table = {
        "1": {K4: KindPlan(3 * x, x)},
        "2": {SQ: KindPlan(2 * x + 1 + h, h), P16: KindPlan(2 * x + 1)},
        "3": {SQ: KindPlan(2 * x + 1 + h, h), P16: KindPlan(2 * x + 1)},
        "4": {K4: KindPlan(3 * x + 2, x), P4: KindPlan(2 * x + 2)},
    }[case]
    return DegreePlan(table, f"odd-{case}")


def degree_plan(spec: SumSpec) -> DegreePlan:
    """Plan used by :func:`fit`: the theorem table, widened where it is too narrow.

    Widenings (x = S + T + k, with k the halved exponent):

    * even exponent, s + t odd: the C(4n,2n) term carries the sum, not C(2n,n)^2;
      it gets x odd factors and degree 3x + 1.
    * C(2n,n)^2 terms with s or t odd get ceil(x/2) factors instead of floor(x/2);
      the degree bound is kept, except that odd exponents with s + t odd need
      degree at least 2x + 2.
    * odd exponent, s and t odd: the C(4n,2n) term gets x + 1 factors, degree 3x + 3.
    * odd exponent, s and t even, x = 0 (|j - i|): numerator degree 1.

    Triangle sums (x = S + T) follow the same pattern: ceil(x/2) factors under
    C(2n,n)^2 when s or t is odd, and one extra C(4n,2n) factor when both are.
    """
    base = theorem_plan(spec)
    if spec.family == Family.TRIANGLE:
        return _widen_triangle(spec, base)
    S, T, k, case = _split(spec)
    x = S + T + k
    kinds = dict(base.kinds)
    K4, SQ = Kind.CENTRAL4N, Kind.CENTRAL_SQ
    up = (x + 1) // 2 - x // 2
    if spec.k % 2 == 0:
        if case in ("2", "3"):
            del kinds[SQ]
            kinds[K4] = KindPlan(3 * x + 1, x)
        elif case == "4":
            p = kinds[SQ]
            kinds[SQ] = KindPlan(p.degree, p.depth + up)
    else:
        if case == "1" and x == 0:
            kinds[K4] = KindPlan(1, 0)
        elif case in ("2", "3"):
            p = kinds[SQ]
            kinds[SQ] = KindPlan(max(p.degree, 2 * x + 2), p.depth + up)
        elif case == "4":
            kinds[K4] = KindPlan(3 * x + 3, x + 1)
    return DegreePlan(kinds, base.case)


def _widen_triangle(spec: SumSpec, base: DegreePlan) -> DegreePlan:
    S, T, _, case = _split(spec)
    x = S + T
    if case == "1":
        return base
    kinds = dict(base.kinds)
    up = (x + 1) // 2 - x // 2
    p = kinds[Kind.CENTRAL_SQ]
    kinds[Kind.CENTRAL_SQ] = KindPlan(p.degree, p.depth + up)
    if case == "4":
        p = kinds[Kind.CENTRAL4N]
        kinds[Kind.CENTRAL4N] = KindPlan(p.degree + 1, p.depth + 1)
    return DegreePlan(kinds, base.case)


# ---------------------------------------------------------------- fitting


def _oracle_for(spec: SumSpec) -> Callable[[int], int]:
    if spec.family == Family.TRIANGLE:
        return lambda n: triangle_sum(spec.s, spec.t, n, n)
    if spec.family == Family.FULL_SQUARE:
        return lambda n: full_square_sum(spec, n)
    raise PlanError("no-oracle", f"family {spec.family.value} has no double-sum oracle")


class _CachedOracle:
    def __init__(self, fn: Callable[[int], int]):
        self.fn = fn
        self.values: dict[int, int] = {}

    def __call__(self, n: int) -> int:
        v = self.values.get(n)
        if v is None:
            v = self.values[n] = self.fn(n)
        return v


def _solve_plan(spec: SumSpec, plan: DegreePlan, oracle: Callable[[int], int]) -> FitReport:
    unknowns = [(kind, d) for kind, kp in plan.kinds.items() for d in range(kp.degree + 1)]
    count = len(unknowns) + GUARD_MARGIN
    fit_points = tuple(range(FIRST_N, FIRST_N + count))
    guard_points = tuple(range(FIRST_N + count, FIRST_N + count + GUARD_POINTS))

    rows, rhs = [], []
    for n in fit_points:
        # n^d * basis / denominator, grouped by kind so each basis value is computed once
        row = []
        for kind, kp in plan.kinds.items():
            base = Fraction(basis_value(kind, n), denominator_value(kind, kp.offsets, n))
            row.extend(base * n**d for d in range(kp.degree + 1))
        rows.append(row)
        rhs.append(oracle(n))

    empty = make_form(spec, ())
    sol = solve_exact(rows, rhs)
    if not sol.consistent:
        bad = fit_points[sol.bad_row]
        log.debug("inconsistent fit for %s at n=%d", spec, bad)
        return FitReport(empty, fit_points, guard_points, Status.INCONSISTENT, plan,
                         offending_n=bad, detail="linear system inconsistent")

    terms = []
    pos = 0
    for kind, kp in plan.kinds.items():
        coeffs = sol.values[pos:pos + kp.degree + 1]
        pos += kp.degree + 1
        terms.append(BasisTerm(kind, Poly(coeffs), kp.offsets))
    form = make_form(spec, terms)
    free = frozenset((unknowns[i][0].value, unknowns[i][1]) for i in sol.free)

    for n in guard_points:
        if eval_closed_form(form, n) != oracle(n):
            return FitReport(form, fit_points, guard_points, Status.INCONSISTENT, plan, free,
                             offending_n=n, detail="guard point mismatch")
    status = Status.UNDERDETERMINED_RESOLVED if free else Status.VERIFIED
    return FitReport(form, fit_points, guard_points, status, plan, free)


def fit(spec: SumSpec, plan: DegreePlan | None = None) -> FitReport:
    """Fit the closed form of ``spec`` using its degree plan (or an explicit one)."""
    if plan is None:
        plan = degree_plan(spec)
    return _solve_plan(spec, plan, _CachedOracle(_oracle_for(spec)))


def fit_generic(
    spec: SumSpec,
    kinds: Iterable[Kind | str],
    max_degree: int,
    denom_depths: Mapping[Kind | str, int] | None = None,
    min_degree: int = 0,
) -> FitReport:
    """Fit with a caller-chosen basis, escalating the shared numerator degree.

    Every numerator gets the same degree bound, starting at ``min_degree`` and
    raised by one after each inconsistent attempt until ``max_degree``.
    """
    kinds = [Kind(k) for k in kinds]
    if not kinds:
        raise ValueError("fit_generic needs at least one basis kind")
    depths = {Kind(k): v for k, v in (denom_depths or {}).items()}
    for k, v in depths.items():
        if v and k not in (Kind.CENTRAL4N, Kind.CENTRAL_SQ):
            raise ValueError(f"{k.value} takes no denominator")
    oracle = _CachedOracle(_oracle_for(spec))
    report = None
    for deg in range(min_degree, max_degree + 1):
        plan = DegreePlan({k: KindPlan(deg, depths.get(k, 0)) for k in kinds}, "generic")
        report = _solve_plan(spec, plan, oracle)
        if report.ok:
            return report
        log.debug("degree %d failed for %s at n=%s", deg, spec, report.offending_n)
    if report is None:
        raise ValueError("min_degree exceeds max_degree")
    return report
