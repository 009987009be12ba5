from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import product_expansion, series_mul, sparse_vectors
from nrlambda.errors import HorizonExceeded, IntegralityViolation
from nrlambda.ghost import periodic, truncated
from nrlambda.necklace import NeckVec, delta, phi, sparse
from nrlambda.numeric import QQ, ZZ, Cyclotomic, cyclotomic_ring, embed_hom, galois_hom, identity_hom
from nrlambda.series import (
    LambdaSeries,
    enr,
    enr_inv,
    from_product,
    lam_add,
    lam_mul,
    lam_neg,
    one,
    product_form,
    series_text,
    z,
    z_inv,
)


def S(*coeffs, ring=None):
    return LambdaSeries(coeffs, ring=ring)


def power_of_one_plus_t(k, N):
    return LambdaSeries([comb(k, i) for i in range(N + 1)], ring=ZZ)


def int_series(order):
    return st.lists(st.integers(-4, 4), min_size=order, max_size=order).map(
        lambda c: LambdaSeries([1] + c, ring=ZZ))


def rat_series(order):
    coef = st.fractions(min_value=-3, max_value=3, max_denominator=3)
    return st.lists(coef, min_size=order, max_size=order).map(
        lambda c: LambdaSeries([1] + c, ring=QQ))


def test_constant_term_is_one():
    with pytest.raises(ValueError):
        S(2, 1)


def test_lam_add_examples():
    assert lam_add(S(1, 1, 0), S(1, 1, 0)) == S(1, 2, 1)
    f = S(1, 3, -2, 5)
    assert lam_add(f, one(3)) == f
    f3 = power_of_one_plus_t(3, 6)
    g = S(1, 0, 0, 1, 0, 0, 0)
    assert lam_add(f3, g).coeffs == tuple(series_mul(list(f3.coeffs), list(g.coeffs), 6))


def test_lam_add_truncates_to_shorter_order():
    assert lam_add(S(1, 1, 1, 1), S(1, 1)).order == 1


def test_lam_neg_examples():
    assert lam_neg(S(1, 1, 0, 0, 0)) == S(1, -1, 1, -1, 1)
    assert lam_neg(one(4)) == one(4)
    f = S(1, 2, -3, 4)
    assert lam_neg(lam_neg(f)) == f
    assert lam_add(f, lam_neg(f)) == one(3)


def test_z_examples():
    for k in range(5):
        assert list(z(power_of_one_plus_t(k, 8)).values) == [k] * 8
    assert list(z(one(6)).values) == [0] * 6
    assert list(z(S(1, 0, -1, 0, 0, 0)).values) == [0, 2, 0, 2, 0]


def test_z_inv_examples():
    assert z_inv(periodic([0, 2]), 6, ring=ZZ) == S(1, 0, -1, 0, 0, 0, 0)
    assert z_inv(periodic([0]), 5, ring=ZZ) == one(5)
    assert z_inv(periodic([3]), 6, ring=ZZ) == power_of_one_plus_t(3, 6)


def test_z_inv_horizon():
    with pytest.raises(HorizonExceeded):
        z_inv(truncated([1, 2, 3]), 4)


def test_lam_mul_examples():
    f = S(1, 2, -1, 5, 3)
    assert lam_mul(power_of_one_plus_t(1, 4), f) == f
    assert lam_mul(power_of_one_plus_t(2, 6), power_of_one_plus_t(3, 6)) == power_of_one_plus_t(6, 6)
    assert lam_mul(one(4), f) == one(4)


@settings(max_examples=30, deadline=None)
@given(rat_series(12), rat_series(12), rat_series(12))
def test_lambda_ring_laws(f, g, h):
    unit = power_of_one_plus_t(1, 12)
    assert lam_add(lam_add(f, g), h) == lam_add(f, lam_add(g, h))
    assert lam_add(f, g) == lam_add(g, f)
    assert lam_mul(lam_mul(f, g), h) == lam_mul(f, lam_mul(g, h))
    assert lam_mul(f, g) == lam_mul(g, f)
    assert lam_mul(f, lam_add(g, h)) == lam_add(lam_mul(f, g), lam_mul(f, h))
    assert lam_mul(unit, f) == f


@settings(max_examples=40, deadline=None)
@given(int_series(15), int_series(15))
def test_z_is_a_ring_homomorphism(f, g):
    assert z(lam_add(f, g)) == z(f) + z(g)
    assert z(lam_mul(f, g)) == z(f) * z(g)
    assert z_inv(z(f), 15, ring=ZZ) == f


def test_enr_examples():
    assert enr(S(1, 1, -1, -1), crosscheck=True).values == (1, 1, 0)
    assert enr(S(1, 0, 0, 1, 0, 0), crosscheck=True).values == (0, 0, 1, 0, 0)
    assert enr(S(1, 1, 1, 0), crosscheck=True).values == (1, -1, -1)
    # cross-check the last one by expanding the product directly
    assert product_expansion({1: 1, 2: -1, 3: -1}, 3) == [1, 1, 1, 0]


def test_enr_inv_examples():
    assert enr_inv(delta(1, 3), 5) == S(1, 0, 0, 1, 0, 0)
    assert enr_inv(delta(2, 2), 6) == S(1, 0, -2, 0, 1, 0, 0)
    half = enr_inv(delta(Fraction(1, 2), 1), 6)
    binomials = [Fraction(1)]
    for k in range(1, 7):
        binomials.append(binomials[-1] * (Fraction(1, 2) - (k - 1)) / k)
    assert list(half.coeffs) == binomials
    assert half.coeffs[:4] == (1, Fraction(1, 2), Fraction(-1, 8), Fraction(1, 16))


def test_enr_inv_horizon():
    with pytest.raises(HorizonExceeded):
        enr_inv(NeckVec(values=[1, 2]), 3)


@settings(max_examples=60, deadline=None)
@given(st.one_of(int_series(40), rat_series(40)))
def test_phi_of_enr_is_z(f):
    x = enr(f, crosscheck=True)
    assert phi(x) == z(f)
    assert enr_inv(x, 40) == f


@settings(max_examples=40, deadline=None)
@given(sparse_vectors())
def test_enr_of_enr_inv(x):
    assert list(enr(enr_inv(x, 30)).values) == x.window(30)
    assert enr_inv(x, 12).coeffs == tuple(product_expansion(x.entries, 12))


def test_maps_commute_with_z_and_enr():
    f = S(1, 2, -1, 3, 0, 1)
    q = f.map(embed_hom(QQ))
    assert q.ring == QQ and z(q) == z(f).map(embed_hom(QQ))
    assert enr(q) == enr(f).map(embed_hom(QQ))
    z3 = Cyclotomic.zeta(3)
    R = cyclotomic_ring(3)
    g = LambdaSeries([1, z3, 1 - z3, 2 * z3 * z3], ring=R)
    s = galois_hom(2)
    assert z(g.map(s)) == z(g).map(s)
    assert enr(g.map(s)) == enr(g).map(s)
    assert phi(enr(g).map(s)) == phi(enr(g)).map(s)
    assert g.map(identity_hom()) == g


def test_product_form_grammar():
    assert product_form(sparse({1: -1, 2: 1})) == "(1+t)^-1 (1-t^2)^1"
    assert product_form(sparse({3: 1})) == "(1+t^3)^1"
    assert product_form(sparse({4: 4, 1: 2})) == "(1+t)^2 (1-t^4)^4"
    assert product_form(NeckVec({}, ring=ZZ)) == "1"
    assert product_form({2: Fraction(1, 2)}) == "(1-t^2)^1/2"


def test_series_text():
    assert series_text(S(1, 0, -1, 0, 6)) == "1 - t^2 + 6*t^4"
    assert series_text(S(1, 1)) == "1 + t"
    assert series_text(one(3)) == "1"


def test_from_product():
    assert from_product({2: 1, 1: 1}, 4) == S(1, 1, -1, -1, 0)


def test_json_round_trip():
    f = S(1, Fraction(1, 2), -3)
    assert LambdaSeries.from_json(f.to_json()) == f


def test_z_inv_asserts_integrality():
    with pytest.raises(IntegralityViolation):
        z_inv(periodic([0, 1]), 2, ring=ZZ)
    assert z_inv(periodic([0, 1]), 2, ring=QQ).coeffs == (1, 0, Fraction(-1, 2))
