import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cuspidal.errors import NotACusp, OrderTooLow
from cuspidal.forms import (BivariatePolynomial, OneForm, differential,
                            is_basic, is_prebasic, is_resonant, nu_E_form)
from cuspidal.rationals import rat
from cuspidal.semigroup import CuspSemigroup, PuiseuxPair, contains
from cuspidal.series import (OrderResult, PuiseuxCurve, TruncatedSeries,
                             integrate_against_conductor, nu_C_form,
                             nu_C_function, pullback_function)

P511 = PuiseuxPair(5, 11)


def curve_5_11():
    return PuiseuxCurve(P511, {11: 1, 12: 1, 13: 1})


def test_series_arithmetic_and_truncation():
    f = TruncatedSeries({3: rat(2), 7: rat(-1)}, trunc=10)
    g = TruncatedSeries({0: rat(1), 5: rat(1)})
    assert (f + g).trunc == 10
    h = f * g
    # trunc(f*g) = min(10 + 0, inf + 3) = 10
    assert h.trunc == 10
    assert h.coeffs == {3: rat(2), 7: rat(-1), 8: rat(2)}
    assert f.shifted(4).trunc == 14
    assert f.theta().coeffs == {3: rat(6), 7: rat(-7)}
    assert f.antiderivative().coeffs == {4: rat(1, 2), 8: rat(-1, 8)}
    assert TruncatedSeries({12: rat(1)}, trunc=10).is_zero()


def test_curve_validation():
    with pytest.raises(NotACusp):
        PuiseuxCurve(P511, {12: 1})
    with pytest.raises(NotACusp):
        PuiseuxCurve(P511, {})
    with pytest.raises(ValueError):
        PuiseuxCurve(P511, {11: 1}, trunc=100)
    c = PuiseuxCurve(P511, {11: 1})
    assert c.trunc == 40 + 2 * 55


def test_nu_C_function_examples():
    c = curve_5_11()
    assert nu_C_function(c, {(1, 0): rat(1)}) == OrderResult.Finite(5)
    assert nu_C_function(c, {(0, 1): rat(1)}) == OrderResult.Finite(11)
    h = {(0, 5): rat(1), (11, 0): rat(-1)}
    assert nu_C_function(c, h) == OrderResult.Finite(56)


def test_nu_C_form_examples():
    c = curve_5_11()
    dx = OneForm(P511, A={(0, 0): rat(1)})
    assert nu_C_form(c, dx) == OrderResult.Finite(5)
    w1 = OneForm(P511, A={(0, 1): rat(-11)}, B={(1, 0): rat(5)})
    assert nu_C_form(c, w1) == OrderResult.Finite(17)


def test_invariant_form_on_its_own_curve():
    c = PuiseuxCurve(P511, {11: 1})
    h = BivariatePolynomial({(0, 5): rat(1), (11, 0): rat(-1)})
    assert nu_C_function(c, h) == OrderResult.AtLeast(c.trunc)
    assert nu_C_form(c, differential(h, P511)) == OrderResult.AtLeast(c.trunc)


def test_integrate_zero_and_monomial():
    c = PuiseuxCurve(P511, {11: 1})
    assert integrate_against_conductor(c, TruncatedSeries.zero()).is_zero()
    h = integrate_against_conductor(c, TruncatedSeries.monomial(40, 1))
    assert h == BivariatePolynomial({(6, 1): rat(1, 41)})
    with pytest.raises(OrderTooLow):
        integrate_against_conductor(c, TruncatedSeries.monomial(39, 1))


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=0, max_value=10 ** 6))
def test_integrate_round_trip(seed):
    rng = random.Random(seed)
    c = curve_5_11()
    xi = TruncatedSeries({45 + k: rat(rng.randint(-3, 3))
                          for k in range(0, 40, rng.randint(1, 7))},
                         trunc=c.trunc)
    h = integrate_against_conductor(c, xi)
    diff = pullback_function(c, h) - xi.antiderivative()
    assert diff.order_lb() >= c.trunc - 1


@st.composite
def small_forms(draw, max_exp=5):
    A, B = {}, {}
    for _ in range(draw(st.integers(min_value=1, max_value=4))):
        key = (draw(st.integers(min_value=0, max_value=max_exp)),
               draw(st.integers(min_value=0, max_value=max_exp)))
        c = rat(draw(st.integers(min_value=-3, max_value=3)))
        if draw(st.booleans()):
            A[key] = A.get(key, rat(0)) + c
        else:
            B[key] = B.get(key, rat(0)) + c
    return OneForm(P511, A, B)


@settings(max_examples=60, deadline=None)
@given(small_forms())
def test_nu_E_below_nu_C(w):
    if w.is_zero():
        return
    c = curve_5_11()
    nu = nu_C_form(c, w)
    if nu.finite:
        assert nu_E_form(w) <= nu.value


@settings(max_examples=60, deadline=None)
@given(small_forms(), st.integers(min_value=0, max_value=3),
       st.integers(min_value=0, max_value=3))
def test_nu_C_multiplicative(w, a, b):
    if w.is_zero():
        return
    c = curve_5_11()
    nu = nu_C_form(c, w)
    shifted = nu_C_form(c, w.times_monomial(a, b))
    gain = 5 * a + 11 * b
    if nu.finite and nu.value + gain < c.trunc:
        assert shifted == OrderResult.Finite(nu.value + gain)
    else:
        assert not shifted.finite


@settings(max_examples=80, deadline=None)
@given(small_forms())
def test_resonance_detects_value_jump(w):
    """Basic forms gain differential value over nu_E exactly when resonant."""
    if w.is_zero() or not is_basic(w):
        return
    assert is_prebasic(w) is not None
    c = curve_5_11()
    nu = nu_C_form(c, w)
    jumped = (not nu.finite) or nu.value > nu_E_form(w)
    assert is_resonant(w) == jumped


@settings(max_examples=80, deadline=None)
@given(small_forms())
def test_value_outside_semigroup_forces_resonance(w):
    if w.is_zero():
        return
    c = curve_5_11()
    nu = nu_C_form(c, w)
    if nu.finite and not contains(CuspSemigroup(P511), nu.value):
        assert is_basic(w) and is_resonant(w)