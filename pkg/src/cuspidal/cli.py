"""Command-line front end.

Every subcommand reads JSON (inline or from a file), runs one
computation, and prints one canonical JSON document.  Exit codes:
0 success, 1 bad input (the message names the violated rule), 2 a
structure check failed (the failing report is printed as JSON so batch
drivers can triage without scraping stderr).
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

from .blowup import is_totally_dicritical
from .corpus import (example_curve_5_11, example_curve_7_17,
                     example_form_4_9, random_cusp_curve)
from .errors import CuspidalError, VerificationFailure
from .forms import is_basic, is_resonant, nu_E_form
from .jsonio import (InputError, basis_to_json, curve_to_json,
                     delorme_to_json, dicritical_to_json, dumps,
                     form_to_json, parse_curve, parse_form,
                     semiroot_to_json, verify_report_to_json)
from .rationals import rat_from_str
from .semigroup import CuspSemigroup, PuiseuxPair, copair
from .semimodule import GammaSemimodule, is_increasing, minimal_basis
from .semiroot import semiroot, verify_main_theorem
from .stdbasis import (compute_standard_basis, delorme_decompose,
                       dicritically_adjust)

DEFAULT_PARAMETERS = "1,2,-1,1/2"


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; 2 is reserved for failed checks
    def error(self, message):
        self.exit(1, "%s: error: %s\n" % (self.prog, message))


def _load_json(source: str):
    if source.lstrip().startswith("{"):
        text = source
    else:
        try:
            with open(source) as handle:
                text = handle.read()
        except OSError as exc:
            raise InputError("cannot read %r: %s" % (source, exc)) from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError("malformed JSON in %r: %s" % (source, exc)) from None


def _pair_argument(text: str) -> PuiseuxPair:
    parts = text.split(",")
    if len(parts) != 2:
        raise InputError("--pair wants the form n,m")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise InputError("--pair wants two integers, got %r" % text) from None
    try:
        return PuiseuxPair(n, m)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _parameter_list(text: str) -> list:
    out = []
    for chunk in text.split(","):
        try:
            out.append(rat_from_str(chunk))
        except (ValueError, ZeroDivisionError):
            raise InputError("unreadable parameter %r" % chunk) from None
    if not out:
        raise InputError("empty parameter list")
    return out


def _curve_from(ns, source: str):
    return parse_curve(_load_json(source),
                       trunc_override=getattr(ns, "truncation", None))


def _basis_bundle(basis):
    adjusted = dicritically_adjust(basis)
    decs = [delorme_decompose(basis, i, j)
            for i in range(0, basis.s_index + 1)
            for j in range(0, i + 1)]
    return basis_to_json(basis, adjusted, decs)


def cmd_semigroup(ns):
    pair = _pair_argument(ns.pair)
    if ns.copair:
        return {"copair": list(copair(pair))}
    gamma = CuspSemigroup(pair)
    return {"pair": [pair.n, pair.m],
            "conductor": gamma.conductor,
            "apery": list(gamma.apery)}


def cmd_semimodule(ns):
    if (ns.curve is None) == (ns.generators is None):
        raise InputError("give exactly one of --curve or --generators")
    if ns.curve is not None:
        basis = compute_standard_basis(_curve_from(ns, ns.curve))
        sm = basis.semimodule
        return {"lambda": list(sm.basis),
                "t": list(basis.t),
                "u": list(sm.axes),
                "conductor": sm.conductor,
                "increasing": True}
    values = [int(v) for v in ns.generators.split(",")]
    if len(values) < 2:
        raise InputError("--generators wants at least n,m")
    pair = _pair_argument("%d,%d" % (values[0], values[1]))
    gamma = CuspSemigroup(pair)
    sm = GammaSemimodule(gamma, minimal_basis(gamma, values))
    return {"lambda": list(sm.basis),
            "t": list(sm.critical_orders) if sm.critical_orders else None,
            "u": list(sm.axes),
            "conductor": sm.conductor,
            "increasing": is_increasing(sm)}


def cmd_standard_basis(ns):
    basis = compute_standard_basis(_curve_from(ns, ns.curve))
    return _basis_bundle(basis)


def cmd_delorme(ns):
    basis = compute_standard_basis(_curve_from(ns, ns.curve))
    return delorme_to_json(delorme_decompose(basis, ns.i, ns.j))


def cmd_dicritical_check(ns):
    omega = parse_form(_load_json(ns.form))
    pair = omega.pair
    verdict = is_totally_dicritical(omega, pair)
    resonant = verdict.vertex is not None and is_resonant(omega)
    return dicritical_to_json(omega, verdict, nu_E_form(omega),
                              copair(pair), is_basic(omega), resonant)


def cmd_semiroots(ns):
    basis = compute_standard_basis(_curve_from(ns, ns.curve))
    indices = [ns.i] if ns.i is not None else \
        list(range(1, basis.s_index + 2))
    parameters = _parameter_list(ns.a)
    out = []
    for i in indices:
        for a in parameters:
            out.append(semiroot_to_json(semiroot(basis, i, a)))
    return {"semiroots": out}


def _verify_one(ns, source: str):
    curve = _curve_from(ns, source)
    basis = compute_standard_basis(curve)
    if ns.all_semiroots:
        jobs = [(i, a) for i in range(1, basis.s_index + 2)
                for a in _parameter_list(DEFAULT_PARAMETERS)]
    else:
        if ns.i is None or ns.a is None:
            raise InputError("verify wants --all-semiroots or both --i and --a")
        jobs = [(ns.i, a) for a in _parameter_list(ns.a)]
    reports = [verify_report_to_json(verify_main_theorem(basis, i, a))
               for i, a in jobs]
    return {"curve": curve_to_json(curve),
            "pass": all(r["pass"] for r in reports),
            "reports": reports}


def cmd_verify(ns):
    results = [_verify_one(ns, source) for source in ns.curve]
    return results[0] if len(results) == 1 else results


def cmd_seed_corpus(ns):
    os.makedirs(ns.directory, exist_ok=True)
    written = []

    def emit(name, obj):
        path = os.path.join(ns.directory, name)
        with open(path, "w") as handle:
            handle.write(dumps(obj))
        written.append(path)

    emit("ex5_11.json", curve_to_json(example_curve_5_11()))
    emit("ex7_17.json", curve_to_json(example_curve_7_17()))
    emit("ex4_9_form.json", form_to_json(example_form_4_9()))
    rng = random.Random(ns.seed)
    for k in range(ns.count):
        emit("rand_%03d.json" % k, curve_to_json(random_cusp_curve(rng)))
    return {"written": written}


def build_parser() -> _Parser:
    parser = _Parser(prog="cuspidal",
                     description="Exact invariants of plane cusps with one "
                                 "Puiseux pair.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("semigroup", parents=[], help="semigroup of a pair")
    p.add_argument("--pair", required=True, metavar="N,M")
    p.add_argument("--copair", action="store_true",
                   help="print only the co-pair (b, d) with d n - b m = 1")
    p.set_defaults(func=cmd_semigroup)

    p = sub.add_parser("semimodule",
                       help="semimodule of differential values")
    p.add_argument("--curve", metavar="JSON")
    p.add_argument("--generators", metavar="N,M,...")
    p.add_argument("--truncation", type=int)
    p.set_defaults(func=cmd_semimodule)

    p = sub.add_parser("standard-basis",
                       help="standard basis, adjusted form, decompositions")
    p.add_argument("--curve", required=True, metavar="JSON")
    p.add_argument("--truncation", type=int)
    p.set_defaults(func=cmd_standard_basis)

    p = sub.add_parser("delorme", help="one Delorme decomposition")
    p.add_argument("--curve", required=True, metavar="JSON")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--truncation", type=int)
    p.set_defaults(func=cmd_delorme)

    p = sub.add_parser("dicritical-check",
                       help="dual dicriticalness verdict for a 1-form")
    p.add_argument("--form", required=True, metavar="JSON")
    p.set_defaults(func=cmd_dicritical_check)

    p = sub.add_parser("semiroots", help="invariant branches of basis forms")
    p.add_argument("--curve", required=True, metavar="JSON")
    p.add_argument("--i", type=int)
    p.add_argument("--a", default=DEFAULT_PARAMETERS, metavar="A1,A2,...")
    p.add_argument("--truncation", type=int)
    p.set_defaults(func=cmd_semiroots)

    p = sub.add_parser("verify", help="recheck the semiroot theorem")
    p.add_argument("--curve", required=True, nargs="+", metavar="JSON")
    p.add_argument("--all-semiroots", action="store_true")
    p.add_argument("--i", type=int)
    p.add_argument("--a", metavar="A1,A2,...")
    p.add_argument("--truncation", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("seed-corpus", help="write example and random curves")
    p.add_argument("--directory", default=".")
    p.add_argument("--count", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_seed_corpus)

    for sp in sub.choices.values():
        sp.add_argument("--output", metavar="PATH",
                        help="write the JSON document here instead of stdout")
    return parser


def main(argv=None) -> int:
    try:
        ns = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        result = ns.func(ns)
    except VerificationFailure as exc:
        payload = {"pass": False, "error": str(exc)}
        if exc.report is not None:
            report = exc.report
            if "checks" in report:
                report = verify_report_to_json(report)
            payload["report"] = report
        sys.stdout.write(dumps(payload))
        return 2
    except (InputError, CuspidalError, ValueError) as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 1
    text = dumps(result)
    if ns.output:
        with open(ns.output, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
