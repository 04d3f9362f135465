"""Analytic semiroots: invariant branches of the standard-basis forms.

A totally dicritical form has a one-parameter family of invariant cusp
branches (t^n, a t^m + ...).  Solving for the branch coefficient by
coefficient is an online triangular process: at each order past nu_E the
next y-coefficient appears through a single nonzero pivot.  The semiroot
attached to omega_i carries, by the structure theorem, exactly the
truncated semimodule generated by lambda_-1 .. lambda_{i-1}; this module
solves the branches, packages them, and rechecks that statement from
scratch on demand.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (IndexOutOfRange, NotDicritical, VerificationFailure,
                     ZeroPivot)
from .forms import OneForm, nu_E_form
from .rationals import rat, rat_to_str
from .semigroup import PuiseuxPair
from .series import OrderResult, PuiseuxCurve, nu_C_form
from .stdbasis import (ExtendedStandardBasis, compute_standard_basis,
                       dicritically_adjust, semimodule_oracle)
from .blowup import is_totally_dicritical

__all__ = [
    "Semiroot", "solve_invariant_branch", "semiroot",
    "verify_main_theorem", "zariski_invariant",
]


@dataclass(frozen=True)
class Semiroot:
    """An invariant branch of omega_i, with its checked semimodule.

    index: the math index i of the source form (1 .. s+1).
    parameter: the leading y-coefficient a of the branch.
    semimodule: the branch's own semimodule of differential values,
    recomputed from the branch and compared against the source prefix
    before this object is handed out.
    """

    index: int
    parameter: object
    curve: PuiseuxCurve
    semimodule: object


def solve_invariant_branch(omega: OneForm, a, pair: PuiseuxPair = None,
                           trunc: int = None) -> PuiseuxCurve:
    """The invariant branch (t^n, a t^m + ...) of a totally dicritical form.

    Writing the pullback as a(t) dt/t, each cloud point (alpha, beta)
    contributes P_beta[K - n alpha] * (n mu + zeta (K - n alpha) / beta)
    to the t^K coefficient, where P_beta is the coefficient series of
    y^beta.  The order-q slice dies for every a by resonance; at order
    q + r the newest coefficient y_{m+r} enters through the pivot
    r * sum zeta_p a^(beta_p - 1) over the weight-q points, so the branch
    is determined one order at a time.

    Raises NotDicritical when the form fails the dual dicriticalness
    check, ZeroPivot when a = 0 or the pivot sum collapses.
    """
    if pair is None:
        pair = omega.pair
    n, m = pair.n, pair.m
    a = rat(a)
    verdict = is_totally_dicritical(omega, pair)
    if not (verdict.combinatorial and verdict.geometric):
        raise NotDicritical("form has no invariant branch family: %r" % omega)
    if a == 0:
        raise ZeroPivot("branch parameter a must be nonzero")
    if trunc is None:
        trunc = pair.conductor + 2 * n * m
    q = nu_E_form(omega)
    points = sorted(omega.cloud.items())
    for (al, be), (mu, ze) in points:
        if n * al + m * be == q and n * mu + m * ze != 0:
            raise NotDicritical(
                "cloud point (%d, %d) at the minimal weight is not resonant"
                % (al, be))
    top_beta = max(be for (_, be), _ in points)
    apow = [rat(1)]
    for _ in range(top_beta):
        apow.append(apow[-1] * a)
    pivot_sum = sum((ze * apow[be - 1] for (al, be), (_, ze) in points
                     if n * al + m * be == q), rat(0))
    if pivot_sum == 0:
        raise ZeroPivot("pivot sum vanished at a = %s" % rat_to_str(a))

    # P[b]: committed coefficients of y(t)^b, keyed by exponent
    P = [dict() for _ in range(top_beta + 1)]
    P[0][0] = rat(1)
    for b in range(1, top_beta + 1):
        P[b][m * b] = apow[b]
    y = {m: a}
    for r in range(1, trunc - q):
        tops = [None] * (top_beta + 1)
        for b in range(1, top_beta + 1):
            acc = rat(0)
            prev = P[b - 1]
            base = m * b + r
            for u, yu in y.items():
                if u == m:
                    continue
                v = prev.get(base - u)
                if v is not None:
                    acc += yu * v
            # the u = m term needs P[b-1] at its own top index, which is
            # not committed yet this round; tops[b-1] holds it
            if tops[b - 1] is not None and tops[b - 1] != 0:
                acc += a * tops[b - 1]
            tops[b] = acc
        K = q + r
        known = rat(0)
        for (al, be), (mu, ze) in points:
            idx = K - n * al
            if be == 0:
                if idx == 0:
                    known += n * mu
                continue
            if idx == m * be + r:
                c = tops[be]
            else:
                c = P[be].get(idx)
            if c:
                known += c * (n * mu + ze * rat(idx, be))
        y_new = -known / (rat(r) * pivot_sum)
        if y_new != 0:
            y[m + r] = y_new
        for b in range(1, top_beta + 1):
            full = tops[b] + rat(b) * apow[b - 1] * y_new
            if full != 0:
                P[b][m * b + r] = full
    return PuiseuxCurve(pair, y, trunc)


def _expected_prefix(basis: ExtendedStandardBasis, i: int):
    return basis.semimodule.truncated(i - 1)


def _source_form(basis: ExtendedStandardBasis, i: int) -> OneForm:
    if not 1 <= i <= basis.s_index + 1:
        raise IndexOutOfRange("semiroot index %d outside 1..%d"
                              % (i, basis.s_index + 1))
    if i == basis.s_index + 1:
        return dicritically_adjust(basis)
    return basis.form(i)


def semiroot(basis: ExtendedStandardBasis, i: int, a) -> Semiroot:
    """The omega_i-semiroot with parameter a, its semimodule checked.

    The branch is solved from omega_i, its standard basis recomputed,
    and the resulting semimodule compared against the source prefix
    Lambda_{i-1}.  A mismatch raises VerificationFailure.
    """
    omega = _source_form(basis, i)
    branch = solve_invariant_branch(omega, a, basis.curve.pair,
                                    basis.curve.trunc)
    sm = compute_standard_basis(branch).semimodule
    expected = _expected_prefix(basis, i)
    if sm != expected:
        raise VerificationFailure(
            "omega_%d-semiroot carries %r, expected %r" % (i, sm, expected),
            report={"i": i, "a": rat_to_str(rat(a)),
                    "semimodule": list(sm.basis),
                    "expected": list(expected.basis)})
    return Semiroot(i, rat(a), branch, sm)


def verify_main_theorem(basis: ExtendedStandardBasis, i: int, a) -> dict:
    """Recheck the semiroot structure statement for omega_i at parameter a.

    Five independent checks: the branch's semimodule equals the source
    prefix Lambda_{i-1} by the standard-basis algorithm and again by the
    brute-force oracle; every lower form omega_j takes value lambda_j on
    the branch; omega_i itself is invariant on it; and the branch's last
    critical order is nu_E(omega_i).  Returns the report on success and
    raises VerificationFailure carrying it otherwise.
    """
    a = rat(a)
    omega = _source_form(basis, i)
    branch = solve_invariant_branch(omega, a, basis.curve.pair,
                                    basis.curve.trunc)
    expected = _expected_prefix(basis, i)
    branch_basis = compute_standard_basis(branch)
    checks = {}
    checks["standard_basis_semimodule"] = branch_basis.semimodule == expected
    checks["oracle_semimodule"] = semimodule_oracle(branch) == expected
    ok = True
    # lambda_j < c_Gamma + n for every j, so this window decides exactly
    window = branch.pair.conductor + branch.pair.n * branch.pair.m
    for j in range(-1, i):
        value = nu_C_form(branch, basis.form(j), window)
        if value != OrderResult.Finite(basis.lambdas[j + 1]):
            ok = False
            break
    checks["values_of_lower_forms"] = ok
    # capping at the truncation keeps the certificate but spares the
    # power cache the dead band above it
    checks["invariance"] = not nu_C_form(branch, omega, branch.trunc).finite
    checks["critical_order"] = nu_E_form(omega) == branch_basis.t[-1]
    report = {
        "i": i,
        "a": rat_to_str(a),
        "parametrization": [[k, rat_to_str(v)]
                            for k, v in sorted(branch.y.coeffs.items())],
        "semimodule": list(branch_basis.semimodule.basis),
        "expected": list(expected.basis),
        "pass": all(checks.values()),
        "checks": checks,
    }
    if not report["pass"]:
        bad = [name for name, good in checks.items() if not good]
        raise VerificationFailure("semiroot check failed at i=%d, a=%s: %s"
                                  % (i, rat_to_str(a), ", ".join(bad)),
                                  report=report)
    return report


def zariski_invariant(curve: PuiseuxCurve):
    """lambda_1 - n, or the string "quasi-homogeneous" when s = 0."""
    basis = compute_standard_basis(curve)
    if basis.s_index == 0:
        return "quasi-homogeneous"
    return basis.lambdas[2] - curve.pair.n
