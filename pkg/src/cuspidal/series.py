"""Truncated power series in t and Puiseux parametrizations of cusps.

A TruncatedSeries stores a sparse exponent -> coefficient map together
with a truncation level T; exponents at or above T are unknown rather
than zero.  trunc = None means the series is known exactly (polynomials
in t).  Arithmetic propagates truncations pessimistically but exactly:
nothing below the reported truncation is ever wrong.

A PuiseuxCurve is the parametrization phi(t) = (t^n, y(t)) with
ord y = m.  Pullbacks of polynomials and forms are assembled term by
term from cached powers y^b and theta(y) * y^b, where theta = t d/dt;
this keeps the cost linear in the number of monomials of the input.

The differential value of a form is the t-order of a(t) in
phi*(omega) = a(t) dt/t.  Orders are reported as Finite(v) or
AtLeast(T): with exact arithmetic a vanishing truncated computation
proves the order is at least T, and the callers that need "infinite"
arrange for that to be enough.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import NotACusp, OrderTooLow
from .forms import BivariatePolynomial, OneForm
from .rationals import ONE, ZERO, rat
from .semigroup import (CuspSemigroup, PuiseuxPair,
                        minimal_b_representation)

__all__ = [
    "TruncatedSeries", "PuiseuxCurve", "OrderResult",
    "pullback_function", "pullback_form", "nu_C_function", "nu_C_form",
    "integrate_against_conductor",
]


def _lift(t):
    return math.inf if t is None else t


def _drop(t):
    return None if t == math.inf else int(t)


class TruncatedSeries:
    """Sparse series in t, exact below the truncation level."""

    __slots__ = ("coeffs", "trunc")

    def __init__(self, coeffs=None, trunc=None):
        bound = _lift(trunc)
        data = {}
        if coeffs:
            for k, v in (coeffs.items() if isinstance(coeffs, dict) else coeffs):
                if k < bound and v != 0:
                    data[int(k)] = data.get(int(k), ZERO) + rat(v)
        self.coeffs = {k: v for k, v in data.items() if v != 0}
        self.trunc = trunc

    @classmethod
    def zero(cls, trunc=None) -> "TruncatedSeries":
        return cls({}, trunc)

    @classmethod
    def monomial(cls, k: int, c=1, trunc=None) -> "TruncatedSeries":
        return cls({k: rat(c)}, trunc)

    def is_zero(self) -> bool:
        """No nonzero known coefficient (the tail may still be anything)."""
        return not self.coeffs

    def order_lb(self):
        """Order when a nonzero coefficient is known, else the truncation."""
        if self.coeffs:
            return min(self.coeffs)
        return _lift(self.trunc)

    def coefficient(self, k: int):
        return self.coeffs.get(k, ZERO)

    def truncate(self, top) -> "TruncatedSeries":
        new = min(_lift(self.trunc), _lift(top))
        return TruncatedSeries({k: v for k, v in self.coeffs.items()
                                if k < new}, _drop(new))

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, ZERO) + v
        return TruncatedSeries(out, _drop(min(_lift(self.trunc),
                                              _lift(other.trunc))))

    def __sub__(self, other):
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, ZERO) - v
        return TruncatedSeries(out, _drop(min(_lift(self.trunc),
                                              _lift(other.trunc))))

    def __neg__(self):
        return self.scaled(-1)

    def scaled(self, c) -> "TruncatedSeries":
        c = rat(c)
        return TruncatedSeries({k: c * v for k, v in self.coeffs.items()},
                               self.trunc)

    def shifted(self, k: int) -> "TruncatedSeries":
        """Multiplication by t^k."""
        return TruncatedSeries({e + k: v for e, v in self.coeffs.items()},
                               _drop(_lift(self.trunc) + k))

    def __mul__(self, other):
        # trunc(f*g) = min(trunc f + ord g, trunc g + ord f)
        bound = min(_lift(self.trunc) + other.order_lb(),
                    _lift(other.trunc) + self.order_lb())
        out = {}
        for k1, v1 in self.coeffs.items():
            for k2, v2 in other.coeffs.items():
                k = k1 + k2
                if k < bound:
                    out[k] = out.get(k, ZERO) + v1 * v2
        return TruncatedSeries(out, _drop(bound))

    def theta(self) -> "TruncatedSeries":
        """t d/dt, the logarithmic derivative operator."""
        return TruncatedSeries({k: k * v for k, v in self.coeffs.items()},
                               self.trunc)

    def antiderivative(self) -> "TruncatedSeries":
        """Termwise integral with zero constant term."""
        return TruncatedSeries({k + 1: v / (k + 1)
                                for k, v in self.coeffs.items()},
                               _drop(_lift(self.trunc) + 1))

    def __eq__(self, other):
        return (isinstance(other, TruncatedSeries)
                and self.coeffs == other.coeffs and self.trunc == other.trunc)

    def __repr__(self):
        if not self.coeffs:
            body = "0"
        else:
            body = " + ".join("%s*t^%d" % (v, k)
                              for k, v in sorted(self.coeffs.items()))
        if self.trunc is None:
            return body
        return "%s + O(t^%d)" % (body, self.trunc)


@dataclass(frozen=True)
class OrderResult:
    """Finite(v): the order is exactly v.  AtLeast(T): everything known
    vanished; the order is T or more (possibly infinite)."""

    finite: bool
    value: int

    @classmethod
    def Finite(cls, v: int) -> "OrderResult":
        return cls(True, v)

    @classmethod
    def AtLeast(cls, threshold: int) -> "OrderResult":
        return cls(False, threshold)

    def __repr__(self):
        return ("Finite(%d)" if self.finite else "AtLeast(%d)") % self.value


class PuiseuxCurve:
    """phi(t) = (t^n, y(t)) with ord y = m, known below the truncation T.

    T defaults to c_Gamma + 2nm and may only be raised: every structural
    decision in the basis algorithms happens below that level, and the
    invariance certificates need the full headroom.
    """

    __slots__ = ("pair", "gamma", "y", "trunc", "_ypow", "_wpow",
                 "_ypow_low", "_wpow_low")

    def __init__(self, pair: PuiseuxPair, y_coeffs, trunc=None):
        self.pair = pair
        self.gamma = CuspSemigroup(pair)
        floor = pair.conductor + 2 * pair.n * pair.m
        if trunc is None:
            trunc = floor
        if trunc < floor:
            raise ValueError("truncation %d below the required %d"
                             % (trunc, floor))
        self.trunc = trunc
        self.y = TruncatedSeries(y_coeffs, trunc)
        if self.y.order_lb() != pair.m:
            raise NotACusp("y-series must start with a nonzero t^%d term"
                           % pair.m)
        self._ypow = {0: TruncatedSeries.monomial(0, 1),
                      1: self.y}
        self._wpow = {}
        self._ypow_low = {}
        self._wpow_low = {}

    @property
    def alpha(self):
        """Leading coefficient of y."""
        return self.y.coefficient(self.pair.m)

    def y_power(self, b: int, prec=None) -> TruncatedSeries:
        """y^b; with prec, only orders below prec, from a cheaper cache."""
        if prec is None or prec > self.trunc:
            p = self._ypow
            if b not in p:
                p[b] = self.y_power(b - 1) * self.y
            return p[b]
        key = (b, prec)
        p = self._ypow_low
        if key not in p:
            if b <= 1:
                p[key] = self._ypow[b].truncate(prec)
            else:
                p[key] = (self.y_power(b - 1, prec) * self.y).truncate(prec)
        return p[key]

    def theta_y_times_power(self, b: int, prec=None) -> TruncatedSeries:
        """theta(y) * y^b, the form-pullback weight of a dy-monomial.

        Computed as theta(y^(b+1)) / (b+1): one coefficient sweep over
        the next power instead of a series product.
        """
        if prec is None or prec > self.trunc:
            w = self._wpow
            if b not in w:
                w[b] = _theta_over(self.y_power(b + 1), b + 1)
            return w[b]
        key = (b, prec)
        w = self._wpow_low
        if key not in w:
            w[key] = _theta_over(self.y_power(b + 1, prec), b + 1)
        return w[key]

    def __eq__(self, other):
        return (isinstance(other, PuiseuxCurve) and self.pair == other.pair
                and self.trunc == other.trunc and self.y == other.y)

    def __repr__(self):
        return "PuiseuxCurve(t^%d, %r)" % (self.pair.n, self.y)


def _theta_over(src: TruncatedSeries, e: int) -> TruncatedSeries:
    """theta(src) / e, exact under the same truncation."""
    inv = rat(1, e)
    return TruncatedSeries({k: k * inv * v for k, v in src.coeffs.items()},
                           src.trunc)


def _accumulate(acc: dict, series: TruncatedSeries, shift: int, c, bound):
    for k, v in series.coeffs.items():
        e = k + shift
        if e < bound:
            acc[e] = acc.get(e, ZERO) + c * v


def pullback_function(curve: PuiseuxCurve, h, prec=None) -> TruncatedSeries:
    """h(phi(t)) as a truncated series; prec caps the working precision."""
    coeffs = h.coeffs if isinstance(h, BivariatePolynomial) else dict(h)
    n = curve.pair.n
    bound = _lift(prec)
    acc = {}
    for (a, b), c in coeffs.items():
        if c == 0:
            continue
        yb = curve.y_power(b, prec)
        bound = min(bound, _lift(yb.trunc) + n * a)
        _accumulate(acc, yb, n * a, c, bound)
    return TruncatedSeries(acc, _drop(bound))


def pullback_form(curve: PuiseuxCurve, omega: OneForm, prec=None) -> TruncatedSeries:
    """a(t) with phi*(omega) = a(t) dt/t.

    A dx pulls back to n t^n A(phi) dt/t and B dy to theta(y) B(phi) dt/t.
    """
    n = curve.pair.n
    bound = _lift(prec)
    acc = {}
    for (a, b), c in omega.A.items():
        yb = curve.y_power(b, prec)
        bound = min(bound, _lift(yb.trunc) + n * (a + 1))
        _accumulate(acc, yb, n * (a + 1), c * n, bound)
    for (a, b), c in omega.B.items():
        wb = curve.theta_y_times_power(b, prec)
        bound = min(bound, _lift(wb.trunc) + n * a)
        _accumulate(acc, wb, n * a, c, bound)
    return TruncatedSeries(acc, _drop(bound))


def _order_result(curve: PuiseuxCurve, series: TruncatedSeries) -> OrderResult:
    clipped = series.truncate(curve.trunc)
    if clipped.coeffs:
        return OrderResult.Finite(min(clipped.coeffs))
    return OrderResult.AtLeast(clipped.trunc)


def nu_C_function(curve: PuiseuxCurve, h, prec=None) -> OrderResult:
    """Intersection order of h = 0 with the curve: ord_t h(phi(t))."""
    return _order_result(curve, pullback_function(curve, h, prec))


def nu_C_form(curve: PuiseuxCurve, omega: OneForm, prec=None) -> OrderResult:
    """Differential value: ord_t a(t) for phi*(omega) = a(t) dt/t."""
    return _order_result(curve, pullback_form(curve, omega, prec))


def integrate_against_conductor(curve: PuiseuxCurve,
                                xi: TruncatedSeries) -> BivariatePolynomial:
    """A polynomial h with h(phi(t)) = integral of xi, up to truncation.

    Works greedily above the conductor: the leading order r of the
    residual is always in Gamma there, so the monomial x^a y^b with
    n a + m b = r and least b kills it; least b keeps a >= 0 for every
    member, not only below n m.
    """
    if xi.is_zero():
        return BivariatePolynomial.zero()
    if xi.order_lb() < curve.gamma.conductor:
        raise OrderTooLow("integrand order %s below the conductor %d"
                          % (xi.order_lb(), curve.gamma.conductor))
    n = curve.pair.n
    alpha = curve.alpha
    residual = xi.antiderivative()
    out = {}
    while residual.coeffs:
        r = min(residual.coeffs)
        rep = minimal_b_representation(curve.gamma, r)
        c = residual.coeffs[r] / alpha ** rep.b
        out[(rep.a, rep.b)] = out.get((rep.a, rep.b), ZERO) + c
        mono = curve.y_power(rep.b).shifted(n * rep.a).scaled(c)
        residual = residual - mono
        assert residual.coefficient(r) == 0
    return BivariatePolynomial(out)
