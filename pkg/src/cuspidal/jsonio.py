"""Canonical JSON encoding of curves, forms, bases and reports.

Rationals travel as strings ("p/q", lowest terms, sign on the numerator)
so no JSON consumer can round them.  Objects are built with a fixed key
order and dumped without sorting, which makes every emission byte
deterministic.  Parsers are strict: an unknown key is an error, not a
warning, because silently ignored input has burned us before.
"""

from __future__ import annotations

import json

from .forms import BivariatePolynomial, OneForm
from .rationals import rat_from_str, rat_to_str
from .semigroup import PuiseuxPair
from .series import PuiseuxCurve

__all__ = [
    "InputError", "dumps",
    "curve_to_json", "parse_curve", "form_to_json", "parse_form",
    "poly_to_json", "basis_to_json", "delorme_to_json",
    "semiroot_to_json", "verify_report_to_json", "dicritical_to_json",
]


class InputError(ValueError):
    """Input JSON violates the schema; the message names the rule."""


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def _require_keys(obj: dict, allowed, required, what: str):
    if not isinstance(obj, dict):
        raise InputError("%s must be a JSON object" % what)
    for key in obj:
        if key not in allowed:
            raise InputError("unknown field %r in %s" % (key, what))
    for key in required:
        if key not in obj:
            raise InputError("missing field %r in %s" % (key, what))


def _parse_pair(n, m) -> PuiseuxPair:
    if not (isinstance(n, int) and isinstance(m, int)):
        raise InputError("pair entries must be integers")
    try:
        return PuiseuxPair(n, m)
    except ValueError as exc:
        raise InputError("invalid Puiseux pair (%r, %r): %s"
                         % (n, m, exc)) from None


def curve_to_json(curve: PuiseuxCurve) -> dict:
    return {
        "n": curve.pair.n,
        "m": curve.pair.m,
        "y": [[k, rat_to_str(v)] for k, v in sorted(curve.y.coeffs.items())],
        "truncation": curve.trunc,
    }


def parse_curve(obj, trunc_override: int = None) -> PuiseuxCurve:
    _require_keys(obj, ("n", "m", "y", "truncation"), ("n", "m", "y"),
                  "curve object")
    pair = _parse_pair(obj["n"], obj["m"])
    coeffs = {}
    for entry in obj["y"]:
        if not (isinstance(entry, list) and len(entry) == 2
                and isinstance(entry[0], int) and isinstance(entry[1], str)):
            raise InputError('y entries must be [exponent, "coefficient"]')
        k, text = entry
        if k in coeffs:
            raise InputError("duplicate y exponent %d" % k)
        try:
            coeffs[k] = rat_from_str(text)
        except (ValueError, ZeroDivisionError):
            raise InputError("unreadable coefficient %r at t^%d"
                             % (text, k)) from None
    if coeffs.get(pair.m, 0) == 0:
        raise InputError("zero leading coefficient: y must start with a "
                         "nonzero t^%d term" % pair.m)
    if any(k < pair.m for k, v in coeffs.items() if v != 0):
        raise InputError("y-series has a term below t^%d" % pair.m)
    trunc = obj.get("truncation")
    if trunc_override is not None:
        trunc = trunc_override
    if trunc is not None:
        floor = pair.conductor + 2 * pair.n * pair.m
        if not isinstance(trunc, int) or trunc < floor:
            raise InputError("truncation must be an integer >= %d for the "
                             "pair (%d, %d)" % (floor, pair.n, pair.m))
    return PuiseuxCurve(pair, coeffs, trunc)


def _coeff_triples(table: dict) -> list:
    return [[a, b, rat_to_str(c)] for (a, b), c in sorted(table.items())]


def _parse_triples(entries, what: str) -> dict:
    table = {}
    for entry in entries:
        if not (isinstance(entry, list) and len(entry) == 3
                and isinstance(entry[0], int) and isinstance(entry[1], int)
                and isinstance(entry[2], str)):
            raise InputError('%s entries must be [a, b, "coefficient"]'
                             % what)
        a, b, text = entry
        if a < 0 or b < 0:
            raise InputError("negative exponent in %s entry %r"
                             % (what, entry))
        if (a, b) in table:
            raise InputError("duplicate monomial x^%d y^%d in %s"
                             % (a, b, what))
        try:
            table[(a, b)] = rat_from_str(text)
        except (ValueError, ZeroDivisionError):
            raise InputError("unreadable coefficient %r in %s"
                             % (text, what)) from None
    return table


def form_to_json(omega: OneForm) -> dict:
    return {
        "pair": [omega.pair.n, omega.pair.m],
        "dx": _coeff_triples(omega.A),
        "dy": _coeff_triples(omega.B),
    }


def parse_form(obj) -> OneForm:
    _require_keys(obj, ("pair", "dx", "dy"), ("pair",), "form object")
    if not (isinstance(obj["pair"], list) and len(obj["pair"]) == 2):
        raise InputError("form pair must be [n, m]")
    pair = _parse_pair(*obj["pair"])
    return OneForm(pair,
                   A=_parse_triples(obj.get("dx", ()), "dx"),
                   B=_parse_triples(obj.get("dy", ()), "dy"))


def poly_to_json(p: BivariatePolynomial) -> list:
    return [[a, b, rat_to_str(c)] for (a, b), c in sorted(p.items())]


def delorme_to_json(dec) -> dict:
    return {
        "i": dec.i,
        "j": dec.j,
        "k": dec.distinguished_index,
        "vij": dec.vij,
        "coefficients": [poly_to_json(f) for f in dec.coefficients],
    }


def basis_to_json(basis, adjusted: OneForm, decompositions) -> dict:
    return {
        "lambda": list(basis.lambdas),
        "t": list(basis.t),
        "u": list(basis.u),
        "forms": [form_to_json(basis.form(i))
                  for i in range(-1, basis.s_index + 1)],
        "adjusted_form": form_to_json(adjusted),
        "delorme": [delorme_to_json(d) for d in decompositions],
    }


def semiroot_to_json(sr) -> dict:
    return {
        "i": sr.index,
        "a": rat_to_str(sr.parameter),
        "parametrization": [[k, rat_to_str(v)]
                            for k, v in sorted(sr.curve.y.coeffs.items())],
        "semimodule": list(sr.semimodule.basis),
    }


def verify_report_to_json(report: dict) -> dict:
    out = dict(report)
    out["checks"] = [{"name": name, "pass": good}
                     for name, good in report["checks"].items()]
    return out


def dicritical_to_json(omega: OneForm, verdict, nu_e: int, copair,
                       stripped_basic: bool, resonant: bool) -> dict:
    return {
        "pair": [omega.pair.n, omega.pair.m],
        "nu_E": nu_e,
        "copair": [copair[0], copair[1]],
        "vertex": list(verdict.vertex) if verdict.vertex is not None else None,
        "basic": stripped_basic,
        "resonant": resonant,
        "combinatorial": verdict.combinatorial,
        "geometric": verdict.geometric,
        "totally_dicritical": verdict.combinatorial and verdict.geometric,
        "multiplicities": list(verdict.multiplicities),
    }
