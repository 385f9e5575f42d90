"""Exact evaluation and discovery of binomial double sums with absolute values."""

from .closedform import BasisTerm, ClosedForm, Kind, eval_closed_form, form_from_json, form_to_json
from .exactmath import BigRat, Poly, binomial
from .fitter import FitReport, Status, degree_plan, fit, fit_generic
from .oracle import Family, SumSpec, full_square_sum, triangle_sum
from .render import emit_latex

__all__ = [
    "BasisTerm", "BigRat", "ClosedForm", "Family", "FitReport", "Kind", "Poly", "Status",
    "SumSpec", "binomial", "degree_plan", "emit_latex", "eval_closed_form", "fit", "fit_generic",
    "form_from_json", "form_to_json", "full_square_sum", "triangle_sum",
]
