"""Command-line interface.

Exit codes: 0 success / verified, 1 mathematical inconsistency or violation,
2 usage error (one-line diagnostic on stderr).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import lemmas
from .closedform import Kind, eval_closed_form, form_from_json, form_to_json
from .expansion import expansion_coeffs, table_json, table_latex
from .fitter import PlanError, Status, fit, fit_generic
from .inequality import (
    decomposition_identity_check,
    gosper_identity_check,
    termwise_violations,
    theorem_inequality_check,
)
from .oracle import Family, SumSpec, full_square_sum, single_sum, triangle_sum
from .render import emit_latex

EXIT_OK, EXIT_MATH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {v}")
    return v


def _positive(text: str) -> int:
    v = _nonneg(text)
    if v == 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _kinds(text: str) -> list[Kind]:
    try:
        return [Kind(k.strip()) for k in text.split(",") if k.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _depth(text: str) -> tuple[Kind, int]:
    try:
        kind, depth = text.split("=")
        return Kind(kind), _nonneg(depth)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected KIND=DEPTH, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="absbinom", description="Exact binomial double sums with absolute values.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_spec(sp, k_required=True):
        sp.add_argument("--s", type=_nonneg, default=0)
        sp.add_argument("--t", type=_nonneg, default=0)
        sp.add_argument("--k", type=_nonneg, required=k_required, default=None if k_required else 0)
        sp.add_argument("--beta", type=_positive, default=1)
        sp.add_argument("--family", choices=[Family.FULL_SQUARE.value, Family.TRIANGLE.value],
                        default=Family.FULL_SQUARE.value)

    ev = sub.add_parser("evaluate", help="brute-force value of one sum")
    add_spec(ev, k_required=False)
    ev.add_argument("--n", type=_nonneg, required=True)
    ev.add_argument("--m", type=_nonneg, help="second parameter (triangle family)")
    ev.add_argument("--emit", choices=["text", "json"], default="text")

    ft = sub.add_parser("fit", help="discover a closed form by Ansatz fitting")
    add_spec(ft, k_required=False)
    ft.add_argument("--generic", action="store_true")
    ft.add_argument("--kinds", type=_kinds)
    ft.add_argument("--max-degree", type=_nonneg)
    ft.add_argument("--min-degree", type=_nonneg, default=0)
    ft.add_argument("--denom-depth", type=_depth, action="append", default=[],
                    metavar="KIND=DEPTH")
    ft.add_argument("--emit", choices=["text", "json", "latex"], default="text")
    ft.add_argument("--canonical", action="store_true", help="LaTeX in the four-basis form")

    vf = sub.add_parser("verify", help="check a closed-form JSON file against the oracle")
    vf.add_argument("--form", required=True)
    vf.add_argument("--n-max", type=_positive, default=20)

    lm = sub.add_parser("lemma", help="evaluate a lemma right-hand side or sweep them")
    lm.add_argument("--which", choices=sorted(lemmas.FUNDAMENTAL) + sorted(lemmas.SINGLE))
    lm.add_argument("--n", type=_nonneg)
    lm.add_argument("--m", type=_nonneg, help="second parameter; exponent parameter k for single sums")
    lm.add_argument("--check", action="store_true")
    lm.add_argument("--max", type=_nonneg, default=12)

    iq = sub.add_parser("inequality", help="exhaustive checks of the two-parameter inequality")
    iq.add_argument("--max", type=_nonneg, required=True)
    iq.add_argument("--which", choices=["theorem", "decomposition", "gosper", "termwise", "all"],
                    default="all")

    ex = sub.add_parser("expansion", help="coefficients of i^(2S) in the falling-square basis")
    ex.add_argument("--S", type=_nonneg, required=True)
    ex.add_argument("--emit", choices=["latex", "json", "both"], default="both")
    return p


def _spec(args) -> SumSpec:
    fam = Family(args.family)
    if fam == Family.FULL_SQUARE and args.k < 1:
        raise UsageError("--k must be >= 1 for full-square sums")
    return SumSpec(args.s, args.t, args.k, args.beta, fam)


def _cmd_evaluate(args, out) -> int:
    spec = _spec(args)
    if spec.family == Family.TRIANGLE:
        m = args.n if args.m is None else args.m
        value = triangle_sum(spec.s, spec.t, args.n, m)
    else:
        if args.m is not None:
            raise UsageError("--m applies to the triangle family only")
        value = full_square_sum(spec, args.n)
    if args.emit == "json":
        out.write(json.dumps({"spec": spec.as_dict(), "n": args.n, "value": str(value)}) + "\n")
    else:
        out.write(f"{value}\n")
    return EXIT_OK


def _cmd_fit(args, out) -> int:
    spec = _spec(args)
    if args.generic:
        if not args.kinds or args.max_degree is None:
            raise UsageError("--generic needs --kinds and --max-degree")
        report = fit_generic(spec, args.kinds, args.max_degree, dict(args.denom_depth),
                             min_degree=args.min_degree)
    else:
        if args.kinds or args.denom_depth or args.max_degree is not None:
            raise UsageError("--kinds/--max-degree/--denom-depth need --generic")
        try:
            report = fit(spec)
        except PlanError as exc:
            raise UsageError(str(exc))
    if report.status is Status.INCONSISTENT:
        sys.stderr.write(f"inconsistent: {report.detail} at n={report.offending_n}\n")
        return EXIT_MATH
    form = report.form.pruned()
    if args.emit == "json":
        out.write(form_to_json(form) + "\n")
    elif args.emit == "latex":
        out.write(emit_latex(form, canonical=args.canonical) + "\n")
    else:
        out.write(f"status: {report.status.value}\n")
        out.write(f"fit points: {report.fit_points[0]}..{report.fit_points[-1]}\n")
        out.write(f"guard points: {report.guard_points[0]}..{report.guard_points[-1]}\n")
        if report.free:
            out.write(f"free coefficients set to 0: {sorted(report.free)}\n")
        out.write(emit_latex(form, canonical=args.canonical) + "\n")
    return EXIT_OK


def _cmd_verify(args, out) -> int:
    try:
        with open(args.form) as fh:
            form = form_from_json(fh.read())
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot read form {args.form}: {exc}")
    bad = [n for n in range(1, args.n_max + 1) if eval_closed_form(form, n) != full_square_sum(form.spec, n)]
    if bad:
        out.write(f"mismatch at n = {bad}\n")
        return EXIT_MATH
    out.write(f"verified n = 1..{args.n_max}\n")
    return EXIT_OK


def _lemma_sweep(max_: int, out) -> int:
    failures = 0
    for name, fn in lemmas.FUNDAMENTAL.items():
        a, b = lemmas.FUNDAMENTAL_EXPONENTS[name]
        bad = [(n, m) for n in range(max_ + 1) for m in range(max_ + 1)
               if fn(n, m) != triangle_sum(a, b, n, m)]
        failures += len(bad)
        out.write(f"{name}: {'ok' if not bad else f'FAIL at {bad}'}\n")
    for name, fn in lemmas.SINGLE.items():
        power, squared = lemmas.SINGLE_SHAPE[name]
        bad = [(k, n) for k in range(min(max_, 4) + 1) for n in range(max_ + 1)
               if fn(k, n) != single_sum(power(k), squared, n)]
        failures += len(bad)
        out.write(f"{name}: {'ok' if not bad else f'FAIL at {bad}'}\n")
    return EXIT_MATH if failures else EXIT_OK


def _cmd_lemma(args, out) -> int:
    if args.check:
        return _lemma_sweep(args.max, out)
    if args.which is None or args.n is None:
        raise UsageError("lemma needs --which and --n (or --check)")
    if args.which in lemmas.FUNDAMENTAL:
        if args.m is None:
            raise UsageError(f"{args.which} needs --m")
        value = lemmas.FUNDAMENTAL[args.which](args.n, args.m)
    else:
        # single-sum lemmas are indexed by k (passed as --m) and n
        if args.m is None:
            raise UsageError(f"{args.which} needs --m (the exponent parameter k)")
        value = lemmas.SINGLE[args.which](args.m, args.n)
    out.write(f"{value}\n")
    return EXIT_OK


def _cmd_inequality(args, out) -> int:
    which = args.which
    failed = False
    M = args.max
    if which in ("theorem", "all"):
        rep = theorem_inequality_check(M)
        diag = rep.equality_on_diagonal_only()
        out.write(f"theorem: violations={rep.violations} equality_on_diagonal_only={diag}\n")
        failed |= bool(rep.violations) or not diag
    if which in ("decomposition", "all"):
        bad = [(n, m) for n in range(M + 1) for m in range(M + 1) if not decomposition_identity_check(n, m)]
        out.write(f"decomposition: failures={bad}\n")
        failed |= bool(bad)
    if which in ("gosper", "all"):
        results = {(n, m): gosper_identity_check(n, m) for n in range(M + 1) for m in range(M + 1)}
        bad = [c for c, ok in results.items() if ok is False]
        skipped = [c for c, ok in results.items() if ok is None]
        out.write(f"gosper: failures={bad} skipped={skipped}\n")
        failed |= bool(bad)
    if which in ("termwise", "all"):
        bad = termwise_violations(M)
        out.write(f"termwise: violations={bad}\n")
        failed |= bool(bad)
    return EXIT_MATH if failed else EXIT_OK


def _cmd_expansion(args, out) -> int:
    table = expansion_coeffs(args.S)
    if args.emit in ("latex", "both"):
        out.write(table_latex(table) + "\n")
    if args.emit in ("json", "both"):
        out.write(table_json(table) + "\n")
    return EXIT_OK


COMMANDS = {
    "evaluate": _cmd_evaluate,
    "fit": _cmd_fit,
    "verify": _cmd_verify,
    "lemma": _cmd_lemma,
    "inequality": _cmd_inequality,
    "expansion": _cmd_expansion,
}


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        sys.stderr.write(f"absbinom: error: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
