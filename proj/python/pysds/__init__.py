"""Exact successive difference substitution (KSDS) for forms on the nonnegative orthant."""

import json
from fractions import Fraction

from ._sds import (
    Form,
    ParseError,
    apply_substitution as _apply_substitution,
    build_B as _build_B,
    build_K as _build_K,
    ksds_json,
    majorizes,
    majorizes_under,
    necessary_condition_json,
    parse_form,
    persistent_coefficient as _persistent_coefficient,
    separating_point as _separating_point,
)

__all__ = [
    "Form",
    "ParseError",
    "apply_substitution",
    "build_B",
    "build_K",
    "check",
    "majorizes",
    "majorizes_under",
    "necessary_condition",
    "parse_form",
    "persistent_coefficient",
    "separating_point",
]


def _frac(text):
    return Fraction(text)


def _strs(values):
    return [str(Fraction(v)) for v in values]


def _as_form(form):
    return parse_form(form) if isinstance(form, str) else form


def _matrix(rows):
    return [[_frac(v) for v in row] for row in rows]


def build_K(q):
    return _matrix(_build_K(_strs(q)))


def build_B(sigma, q):
    return _matrix(_build_B(list(sigma), _strs(q)))


def apply_substitution(form, rows):
    return _apply_substitution(_as_form(form), [_strs(r) for r in rows])


def separating_point(alpha, beta, sigma):
    return [_frac(v) for v in _separating_point(list(alpha), list(beta), list(sigma))]


def persistent_coefficient(form, sigma, q, m, lam):
    return _frac(_persistent_coefficient(_as_form(form), list(sigma), _strs(q), m, list(lam)))


def necessary_condition(form):
    """Majorization report as a dict: holds, violations, checked_orderings."""
    return json.loads(necessary_condition_json(_as_form(form)))


def check(form, matrix="an", max_depth=6, check_necessary=False, dedup=True, node_budget=1_000_000):
    """Run KSDS. Witness coordinates and value come back as Fractions."""
    report = json.loads(
        ksds_json(_as_form(form), matrix, max_depth, check_necessary, dedup, node_budget)
    )
    witness = report.get("witness")
    if witness is not None:
        witness["point"] = [_frac(v) for v in witness["point"]]
        witness["value"] = _frac(witness["value"])
    return report
