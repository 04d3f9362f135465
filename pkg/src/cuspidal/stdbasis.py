"""Standard bases of 1-forms along a cusp.

Builds the chain omega_-1 = dx, omega_0 = dy, omega_1, ..., omega_s whose
differential values are the minimal generators lambda_i of the semimodule,
extends it with a dicritically adjusted omega_{s+1} whose value escapes
every finite order, and rewrites any omega_{i+1} as a combination
sum f_ell omega_ell (Delorme decomposition).

Index conventions, used throughout: a "math" index i runs over
-1, 0, 1, ..., s (+1 for the adjusted form) and lives at python position
i + 1 inside `forms`, `semimodule.basis` and the critical-order tuple.
"""

import math
from dataclasses import dataclass

from .errors import IndexOutOfRange, InternalDisagreement, NotACusp
from .forms import (BivariatePolynomial, OneForm, differential, is_basic,
                    is_resonant, nu_E_form)
from .semigroup import contains
from .semimodule import (GammaSemimodule, critical_orders, limits,
                         minimal_basis)
from .series import (OrderResult, PuiseuxCurve, integrate_against_conductor,
                     pullback_form, pullback_function)
from .blowup import is_totally_dicritical


@dataclass(frozen=True)
class TraceStep:
    """One cancellation: the candidate lost mu x^c y^d omega_j."""

    j: int
    c: int
    d: int
    mu: object


@dataclass(frozen=True)
class ConstructionTrace:
    """How a basis form was assembled from the earlier ones.

    omega = rho * (seed - sum of the steps) - d(potential), where the seed
    is x^exponent omega_source (axis "x") or y^exponent omega_source
    (axis "y"); `potential` is None except for the adjusted form, and
    rho == 1 whenever it is present.
    """

    source: int
    axis: str
    exponent: int
    steps: tuple
    rho: int
    potential: object


@dataclass(frozen=True)
class DelormeDecomposition:
    """omega_{i+1} = sum_{ell=-1}^{j} coefficients[ell+1] * omega_ell.

    Every summand has value >= vij = t_{i+1} - t_j + lambda_j, with
    equality exactly at ell = j and at the single ell = distinguished_index.
    """

    i: int
    j: int
    coefficients: tuple
    distinguished_index: int
    vij: int


class ExtendedStandardBasis:
    """The standard basis of a curve, with room for the adjusted form.

    `forms` holds omega_-1 .. omega_s; `adjusted` and `certificate` stay
    None until dicritically_adjust fills them.  `traces` keeps, for every
    constructed form, the exact combination that produced it; Delorme
    decompositions are read off these traces instead of being re-derived.
    """

    __slots__ = ("curve", "semimodule", "forms", "traces",
                 "adjusted", "certificate", "_pullbacks", "_cancel_cache")

    def __init__(self, curve, semimodule, forms, traces):
        self.curve = curve
        self.semimodule = semimodule
        self.forms = tuple(forms)
        self.traces = dict(traces)
        self.adjusted = None
        self.certificate = None
        self._pullbacks = {}
        self._cancel_cache = {}

    @property
    def s_index(self) -> int:
        return self.semimodule.s_index

    @property
    def lambdas(self) -> tuple:
        return self.semimodule.basis

    @property
    def t(self) -> tuple:
        return critical_orders(self.semimodule)

    @property
    def u(self) -> tuple:
        return self.semimodule.axes

    def form(self, i: int) -> OneForm:
        """omega_i by math index; i = s+1 reaches the adjusted form."""
        if -1 <= i <= self.s_index:
            return self.forms[i + 1]
        if i == self.s_index + 1 and self.adjusted is not None:
            return self.adjusted
        raise IndexOutOfRange("no form at index %d" % i)

    def full_pullback(self, i: int):
        """a(t) of omega_i at the curve's own truncation, cached."""
        if i not in self._pullbacks:
            self._pullbacks[i] = pullback_form(self.curve, self.form(i))
        return self._pullbacks[i]

    def __repr__(self):
        tag = "+adjusted" if self.adjusted is not None else ""
        return ("ExtendedStandardBasis(lambdas=%r%s)"
                % (list(self.lambdas), tag))


def _cancellation_site(gamma, lambdas, value):
    """Smallest math index j with value - lambda_j in Gamma, then the
    lexicographically least (c, d) with n c + m d = value - lambda_j."""
    n, m = gamma.pair.n, gamma.pair.m
    for pos, lam in enumerate(lambdas):
        gap = value - lam
        if gap < 0 or not contains(gamma, gap):
            continue
        c = (gap * pow(n, -1, m)) % m
        d = (gap - n * c) // m
        if d < 0:
            raise InternalDisagreement("member %d lost its representation"
                                       % gap)
        return pos - 1, c, d
    return None


def _canceller_series(curve, pullbacks, cache, pos, c, d, prec=None):
    """Pullback of x^c y^d omega_j (j at python position pos)."""
    key = (pos, d)
    base = cache.get(key)
    if base is None:
        base = (pullbacks[pos] if d == 0
                else curve.y_power(d, prec) * pullbacks[pos])
        cache[key] = base
    return base.shifted(curve.pair.n * c)


def _clearing_scalar(omega: OneForm) -> int:
    """Least positive integer rho making rho * omega integral.

    Only denominators are cleared; an already integral form is returned
    unscaled even when its coefficients share a content."""
    rho = 1
    for table in (omega.A, omega.B):
        for v in table.values():
            rho = math.lcm(rho, int(v.denominator))
    return rho


def _seed(curve, sm, forms, pullbacks, prec=None):
    """Candidate opening the next stage: the cheaper of x^l1 omega_s',
    y^l2 omega_s', together with its pullback and the axis value."""
    n, m = curve.pair.n, curve.pair.m
    sp = sm.s_index
    lim = limits(sm, sp)
    ux = n * lim.ell1 + sm.basis[-1]
    uy = m * lim.ell2 + sm.basis[-1]
    if ux <= uy:
        eta = forms[-1].times_monomial(lim.ell1, 0)
        a_eta = pullbacks[-1].shifted(n * lim.ell1)
        return "x", lim.ell1, ux, eta, a_eta
    eta = forms[-1].times_monomial(0, lim.ell2)
    a_eta = curve.y_power(lim.ell2, prec) * pullbacks[-1]
    return "y", lim.ell2, uy, eta, a_eta


def compute_standard_basis(curve: PuiseuxCurve) -> ExtendedStandardBasis:
    """Construct omega_1, ..., omega_s and the semimodule of the curve.

    Each stage opens with the seed above the last basis element and
    repeatedly cancels the leading value against the cheapest
    x^c y^d omega_j while it stays in the current semimodule; a value
    outside it is a new generator, a value reaching the semigroup
    conductor ends the construction.  Cancellation bookkeeping runs at
    order conductor + 2, which decides every branch exactly; the curve's
    own truncation only matters for the later dicritical adjustment.
    """
    pair = curve.pair
    n, m = pair.n, pair.m
    if n < 2:
        raise NotACusp("(%d, %d) parametrizes a smooth branch" % (n, m))
    gamma = curve.gamma
    c_gamma = pair.conductor
    work = c_gamma + 2
    forms = [OneForm(pair, {(0, 0): 1}, None), OneForm(pair, None, {(0, 0): 1})]
    lam = [n, m]
    t_chain = [n, m]
    pullbacks = [pullback_form(curve, forms[0], work),
                 pullback_form(curve, forms[1], work)]
    cache = {}
    traces = {}
    while True:
        sm = GammaSemimodule(gamma, tuple(lam))
        axis, ell, u_next, eta, a_eta = _seed(curve, sm, forms, pullbacks,
                                              work)
        steps = []
        new_value = None
        while True:
            nu = a_eta.order_lb()
            if nu >= c_gamma:
                break
            if not sm.contains(nu):
                new_value = nu
                break
            j, c, d = _cancellation_site(gamma, lam, nu)
            canc = _canceller_series(curve, pullbacks, cache, j + 1, c, d,
                                     work)
            mu = a_eta.coefficient(nu) / canc.coefficient(nu)
            a_eta = a_eta - canc.scaled(mu)
            eta = eta - forms[j + 1].times_monomial(c, d, mu)
            steps.append(TraceStep(j, c, d, mu))
            if not a_eta.order_lb() > nu:
                raise InternalDisagreement("cancellation at %d did not raise"
                                           " the value" % nu)
        if new_value is None:
            break
        if new_value <= u_next:
            raise InternalDisagreement("generator %d at or under the axis %d"
                                       % (new_value, u_next))
        rho = _clearing_scalar(eta)
        omega = eta.scaled(rho)
        t_chain.append(t_chain[-1] + u_next - lam[-1])
        lam.append(new_value)
        forms.append(omega)
        pullbacks.append(a_eta.scaled(rho))
        traces[len(lam) - 2] = ConstructionTrace(len(lam) - 3, axis, ell,
                                                 tuple(steps), rho, None)
        if nu_E_form(omega) != t_chain[-1]:
            raise InternalDisagreement("form for %d has order %d, chain says"
                                       " %d" % (new_value, nu_E_form(omega),
                                                t_chain[-1]))
        if len(lam) > n:
            raise InternalDisagreement("more generators than residues mod %d"
                                       % n)
    sm = GammaSemimodule(gamma, tuple(lam))
    t_chain.append(t_chain[-1] + u_next - lam[-1])
    if tuple(t_chain) != critical_orders(sm):
        raise InternalDisagreement("incremental critical orders %r disagree"
                                   " with the semimodule's %r"
                                   % (t_chain, critical_orders(sm)))
    basis = ExtendedStandardBasis(curve, sm, forms, traces)
    for i in range(1, sm.s_index + 1):
        _check_shape(basis.form(i), i)
    return basis


def _check_shape(omega: OneForm, i: int):
    """Every constructed form past dy must be basic and resonant."""
    if not is_basic(omega):
        raise InternalDisagreement("omega_%d is not basic" % i)
    if not is_resonant(omega):
        raise InternalDisagreement("omega_%d is not resonant" % i)


def dicritically_adjust(basis: ExtendedStandardBasis) -> OneForm:
    """Extend the basis with omega_{s+1}, invariant up to the truncation.

    Runs the same cancellation loop as the construction, but at the full
    curve truncation and past the conductor; whatever finite value
    survives is integrated into a potential h and removed as d h.  The
    result is checked to be totally dicritical before it is stored.
    """
    if basis.adjusted is not None:
        return basis.adjusted
    curve, sm = basis.curve, basis.semimodule
    pair = curve.pair
    gamma = curve.gamma
    c_gamma = pair.conductor
    lam = list(sm.basis)
    s = sm.s_index
    pullbacks = [basis.full_pullback(i) for i in range(-1, s + 1)]
    axis, ell, u_next, eta, a_eta = _seed(curve, sm, basis.forms, pullbacks)
    if u_next != basis.u[-1]:
        raise InternalDisagreement("seed value %d off the last axis %d"
                                   % (u_next, basis.u[-1]))
    steps = []
    while True:
        nu = a_eta.order_lb()
        # The opening value u_{s+1} always has a second representation
        # over some omega_k with k < s, so the first cancellation fires
        # even past the conductor; later ones stop there and leave the
        # rest to the potential.
        if nu > c_gamma and steps:
            break
        if nu >= curve.trunc:
            break
        if not sm.contains(nu):
            raise InternalDisagreement("value %d under the conductor escaped"
                                       " the construction" % nu)
        j, c, d = _cancellation_site(gamma, lam, nu)
        canc = _canceller_series(curve, pullbacks, basis._cancel_cache,
                                 j + 1, c, d)
        mu = a_eta.coefficient(nu) / canc.coefficient(nu)
        a_eta = a_eta - canc.scaled(mu)
        eta = eta - basis.forms[j + 1].times_monomial(c, d, mu)
        steps.append(TraceStep(j, c, d, mu))
        if not a_eta.order_lb() > nu:
            raise InternalDisagreement("cancellation at %d did not raise"
                                       " the value" % nu)
    if a_eta.truncate(curve.trunc).is_zero():
        rho = _clearing_scalar(eta)
        omega = eta.scaled(rho)
        potential = None
        residual = a_eta.scaled(rho)
    else:
        potential = integrate_against_conductor(curve, a_eta.shifted(-1))
        omega = eta - differential(potential, pair)
        rho = 1
        residual = a_eta - pullback_function(curve, potential).theta()
        if residual.order_lb() < curve.trunc:
            raise InternalDisagreement("potential left a residue of order %s"
                                       % residual.order_lb())
    if nu_E_form(omega) != basis.t[-1]:
        raise InternalDisagreement("adjusted form has order %d, not t = %d"
                                   % (nu_E_form(omega), basis.t[-1]))
    _check_shape(omega, s + 1)
    verdict = is_totally_dicritical(omega, pair)
    if not (verdict.combinatorial and verdict.geometric):
        raise InternalDisagreement("adjusted form is not totally dicritical")
    basis.adjusted = omega
    basis.certificate = OrderResult.AtLeast(curve.trunc)
    basis.traces[s + 1] = ConstructionTrace(s, axis, ell, tuple(steps),
                                            rho, potential)
    basis._pullbacks[s + 1] = residual
    return omega


def _level_coefficients(basis: ExtendedStandardBasis, target: int) -> dict:
    """f_ell with omega_target = sum_{ell < target} f_ell omega_ell,
    transcribed from the construction trace."""
    tr = basis.traces[target]
    top = target - 1
    f = {ell: BivariatePolynomial.zero() for ell in range(-1, top + 1)}
    if tr.axis == "x":
        f[top] = f[top] + BivariatePolynomial.monomial(tr.exponent, 0, tr.rho)
    else:
        f[top] = f[top] + BivariatePolynomial.monomial(0, tr.exponent, tr.rho)
    for st in tr.steps:
        f[st.j] = f[st.j] - BivariatePolynomial.monomial(st.c, st.d,
                                                         tr.rho * st.mu)
    if tr.potential is not None:
        dh = differential(tr.potential, basis.curve.pair)
        f[-1] = f[-1] - BivariatePolynomial(dh.A)
        f[0] = f[0] - BivariatePolynomial(dh.B)
    return f


def delorme_decompose(basis: ExtendedStandardBasis, i: int,
                      j: int) -> DelormeDecomposition:
    """Rewrite omega_{i+1} over omega_-1, ..., omega_j and certify the
    value pattern of the summands.

    Starts from the trace of omega_{i+1} and substitutes the traces of
    omega_i, ..., omega_{j+1} in descending order; the result is an exact
    polynomial identity, re-checked here together with the level values.
    """
    s = basis.s_index
    if not 0 <= j <= i <= s:
        raise IndexOutOfRange("need 0 <= j <= i <= %d, got (%d, %d)"
                              % (s, i, j))
    if i == s:
        dicritically_adjust(basis)
    f = _level_coefficients(basis, i + 1)
    for jj in range(i - 1, j - 1, -1):
        g = _level_coefficients(basis, jj + 1)
        h_top = f.pop(jj + 1)
        for ell in range(-1, jj + 1):
            f[ell] = f[ell] + h_top * g[ell]
    k = basis.traces[j + 1].steps[0].j
    vij = basis.t[i + 2] - basis.t[j + 1] + basis.lambdas[j + 1]
    target = basis.form(i + 1)
    recomposed = OneForm.zero(basis.curve.pair)
    for ell in range(-1, j + 1):
        recomposed = recomposed + basis.form(ell).times_polynomial(f[ell])
    if not (target - recomposed).is_zero():
        raise InternalDisagreement("decomposition (%d, %d) does not recompose"
                                   % (i, j))
    at_minimum = []
    for ell in range(-1, j + 1):
        if f[ell].is_zero():
            continue
        value = (pullback_function(basis.curve, f[ell])
                 * basis.full_pullback(ell)).order_lb()
        if value < vij:
            raise InternalDisagreement("summand %d of (%d, %d) has value %s"
                                       " under %d" % (ell, i, j, value, vij))
        if value == vij:
            at_minimum.append(ell)
    if sorted(at_minimum) != sorted((j, k)):
        raise InternalDisagreement("levels touching %d are %r, expected"
                                   " {%d, %d}" % (vij, at_minimum, j, k))
    return DelormeDecomposition(i, j, tuple(f[ell] for ell in range(-1, j + 1)),
                                k, vij)


def semimodule_oracle(curve: PuiseuxCurve) -> GammaSemimodule:
    """The semimodule of differential values, found by brute force.

    Triangularizes the pullbacks of the monomial forms x^a y^b dx and
    x^a y^b dy in weight order, recording every new leading order.  A
    recorded order set spanning a semimodule with conductor c makes any
    monomial of weight >= c + n redundant (each minimal generator is the
    least member of its residue class, hence under c + n), so the scan
    stops there; c_Gamma + n m is a hard ceiling.  Shares nothing with
    compute_standard_basis beyond the series arithmetic.
    """
    pair = curve.pair
    n, m = pair.n, pair.m
    gamma = curve.gamma
    cap = pair.conductor + n * m
    monos = []
    for b in range(0, (cap - n) // m + 1):
        for a in range(0, (cap - n * 1 - m * b - 1) // n + 1):
            monos.append((n * (a + 1) + m * b, 0, a, b))
    for b in range(0, (cap - m) // m + 1):
        for a in range(0, (cap - m * (b + 1) - 1) // n + 1):
            monos.append((n * a + m * (b + 1), 1, a, b))
    monos.sort()
    table = {}
    recorded = []
    bound = cap
    for w, kind, a, b in monos:
        if w >= bound:
            break
        if kind == 0:
            s = curve.y_power(b, bound).shifted(n * (a + 1)).scaled(n)
        else:
            s = curve.theta_y_times_power(b, bound).shifted(n * a)
        while True:
            o = s.order_lb()
            if o >= bound:
                break
            pivot = table.get(o)
            if pivot is None:
                table[o] = s.scaled(1 / s.coefficient(o))
                recorded.append(o)
                span = GammaSemimodule(gamma,
                                       minimal_basis(gamma, tuple(recorded)))
                bound = min(bound, span.conductor + n)
                break
            s = s - pivot.scaled(s.coefficient(o))
    return GammaSemimodule(gamma, minimal_basis(gamma, tuple(recorded)))
