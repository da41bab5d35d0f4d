from __future__ import annotations

import pickle
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from indorder.poly import (
    ONE,
    X,
    IntPolynomial,
    poly_add,
    poly_eval_rational,
    poly_gcd,
    poly_mul,
    poly_scale_shift,
    poly_sub,
    rem_primitive,
)

coeff_lists = st.lists(st.integers(-50, 50), max_size=7)
rationals = st.fractions(min_value=-5, max_value=5, max_denominator=40)


def test_trailing_zeros_trimmed():
    assert IntPolynomial([1, 2, 0, 0]).coeffs == (1, 2)
    assert IntPolynomial([0, 0]).is_zero()
    assert IntPolynomial().degree == -1


def test_eval_k2_root():
    assert poly_eval_rational(IntPolynomial([1, 2]), Fraction(-1, 2)) == 0


def test_eval_at_zero_is_constant_term():
    p = IntPolynomial([7, -3, 5])
    assert p.eval(0) == 7


def test_square_of_one_plus_x():
    assert poly_mul(ONE + X, ONE + X) == IntPolynomial([1, 2, 1])


def test_helpers_agree_with_operators():
    p, q = IntPolynomial([1, 3, 1]), IntPolynomial([2, -1])
    assert poly_add(p, q) == p + q
    assert poly_sub(p, q) == p - q
    assert poly_scale_shift(p, -2, 3) == IntPolynomial([0, 0, 0, -2, -6, -2])


def test_human_and_json():
    p = IntPolynomial([1, 6, 10, 6, 1])
    assert p.human() == "1 + 6x + 10x^2 + 6x^3 + x^4"
    assert IntPolynomial([0, -1, 0, 3]).human() == "-x + 3x^3"
    assert IntPolynomial().human() == "0"
    assert p.to_json() == '["1", "6", "10", "6", "1"]'
    assert IntPolynomial.from_json(p.to_json()) == p


def test_big_coefficients_survive_json():
    p = IntPolynomial([1, 10 ** 40, -(3 ** 90)])
    assert IntPolynomial.from_json(p.to_json()) == p


def test_pickle_roundtrip():
    p = IntPolynomial([1, 4, 3, 1])
    assert pickle.loads(pickle.dumps(p)) == p


def test_immutable():
    p = IntPolynomial([1])
    with pytest.raises(AttributeError):
        p.coeffs = (2,)


def test_strip_x_and_lowest_order():
    p = IntPolynomial([0, 0, 3, 1])
    assert p.lowest_order() == 2
    assert p.strip_x() == (2, IntPolynomial([3, 1]))
    with pytest.raises(ValueError):
        IntPolynomial().lowest_order()


def test_exact_div():
    assert (IntPolynomial([1, 3, 3, 1])).exact_div(ONE + X) == IntPolynomial([1, 2, 1])
    with pytest.raises(ValueError):
        IntPolynomial([1, 0, 1]).exact_div(ONE + X)


@given(coeff_lists, coeff_lists, rationals)
def test_ring_ops_match_evaluation(a, b, x):
    p, q = IntPolynomial(a), IntPolynomial(b)
    assert (p + q).eval(x) == p.eval(x) + q.eval(x)
    assert (p - q).eval(x) == p.eval(x) - q.eval(x)
    assert (p * q).eval(x) == p.eval(x) * q.eval(x)


@given(coeff_lists, rationals)
def test_sign_at_matches_fraction_eval(a, x):
    p = IntPolynomial(a)
    v = Fraction(p.eval(x))
    assert p.sign_at(x) == (v > 0) - (v < 0)


@given(coeff_lists, st.integers(0, 4))
def test_power_is_repeated_product(a, e):
    p = IntPolynomial(a)
    out = ONE
    for _ in range(e):
        out = out * p
    assert p ** e == out


@given(coeff_lists, st.lists(st.integers(-20, 20), min_size=1, max_size=4).filter(lambda c: c[-1] != 0))
def test_divmod_reconstructs(a, b):
    p, d = IntPolynomial(a), IntPolynomial(b)
    q, r = p.divmod_q(d)
    assert len(r) < len(d.coeffs) or not r
    # p = q*d + r, evaluated at a few points
    for x in (Fraction(-3, 2), Fraction(0), Fraction(5, 7)):
        qv = sum(c * x ** i for i, c in enumerate(q))
        rv = sum(c * x ** i for i, c in enumerate(r))
        assert p.eval(x) == qv * d.eval(x) + rv


@settings(max_examples=60)
@given(coeff_lists, coeff_lists, coeff_lists)
def test_gcd_divides_and_contains_common_factor(a, b, c):
    p, q, f = IntPolynomial(a), IntPolynomial(b), IntPolynomial(c)
    if f.is_zero() or (p.is_zero() and q.is_zero()):
        return
    g = poly_gcd(p * f, q * f)
    assert g.leading > 0
    for h in (p * f, q * f):
        if not h.is_zero():
            h.exact_div(g)
    # f's primitive part divides the gcd
    if f.degree >= 1:
        _, r = g.divmod_q(f.primitive())
        assert not r


def test_rem_primitive_scales_by_positive_factor():
    a, b = IntPolynomial([1, 0, 0, 1]), IntPolynomial([1, 2])
    _, r = a.divmod_q(b)
    rp = rem_primitive(a, b)
    assert rp.degree == len(r) - 1
    assert (rp.leading > 0) == (r[-1] > 0)
