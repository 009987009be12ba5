from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nrlambda.errors import HorizonExceeded, ParseError, QAlgebraRequired
from nrlambda.ghost import GhostVec, periodic, truncated
from nrlambda.numeric import QQ, Cyclotomic, cyclotomic_ring, embed_hom, galois_hom, identity_hom
from nrlambda.verify import operator_identities

z3 = Cyclotomic.zeta(3)


def periodic_vectors(ring=QQ, max_period=4):
    return st.lists(st.integers(-9, 9), min_size=1, max_size=max_period).map(
        lambda v: GhostVec(v, period=len(v), ring=ring))


def test_get():
    assert periodic([0, 2])[5] == 0
    assert periodic([7])[10 ** 6] == 7
    with pytest.raises(HorizonExceeded):
        truncated([1, 2, 3, 4])[5]


def test_pointwise_examples():
    a = periodic([0, 2])
    unit = periodic([1])
    assert a * unit == a
    s = a + periodic([1, 1, 0])
    assert s.period == 6
    # entry n is a_n + b_n read straight off the two periodic vectors
    assert list(s.values) == [(0, 2)[(n - 1) % 2] + (1, 1, 0)[(n - 1) % 3] for n in range(1, 7)]
    assert list(s.values) == [1, 3, 0, 3, 1, 2]
    zero = periodic([0])
    assert zero + zero == zero


def test_truncated_operand_wins():
    s = periodic([1, 2]) + truncated([1, 1, 1])
    assert not s.is_periodic and s.horizon == 3 and list(s.values) == [2, 3, 2]
    assert (truncated([1] * 5) * truncated([2] * 3)).horizon == 3


def test_operator_examples():
    assert periodic([0, 2]).F(2) == periodic([2])
    assert periodic([0, 2]).F(2).period == 1
    w = truncated([1, 2, 3, 4, 5, 6], ring=QQ).W(2)
    assert w.horizon == 6 and list(w.values) == [0, 2, 0, 4, 0, 6]
    v = periodic([1]).V(2)
    assert v.period == 2 and list(v.values) == [0, 2]


def test_operator_shapes():
    a = periodic([1, 2, 3], ring=QQ)
    assert a.V(2).period == 6
    assert a.F(2).period == 3 and a.F(3).period == 1
    assert a.T(4).period == 4
    assert a.W(2).period == 6
    b = truncated(list(range(1, 11)), ring=QQ)
    assert b.V(3).horizon == 30
    assert b.F(3).horizon == 3
    assert b.T(4).is_periodic and b.T(4).period == 4
    assert not b.T(12).is_periodic and b.T(12).horizon == 10
    assert b.W(3).horizon == 10
    with pytest.raises(HorizonExceeded):
        b.F(11)


def test_divided_operators_need_q_algebra():
    a = periodic([1, 2])
    with pytest.raises(QAlgebraRequired):
        a.Vdiv(2)
    with pytest.raises(QAlgebraRequired):
        a.W(3)
    assert a.Vdiv(1) == a and a.W(1) == a


def test_definitions_entrywise():
    a = periodic([3, -1, 4, 1], ring=QQ)
    for r in range(1, 7):
        for n in range(1, 40):
            assert a.V(r)[n] == (r * a[n // r] if n % r == 0 else 0)
            assert a.Vdiv(r)[n] == (Fraction(a[n // r]) if n % r == 0 else 0)
            assert a.F(r)[n] == a[n * r]
            assert a.T(r)[n] == a[gcd(n, r)]
            assert a.W(r)[n] == (a[n] if n % r == 0 else 0)


def test_is_T_image():
    assert periodic([0, 2]).is_T_image(2)
    assert not periodic([z3, z3 * z3, 1]).is_T_image(3)
    assert periodic([5]).is_T_image(1)
    v = truncated([1, 2, 1, 2])
    verdict = v.is_T_image(2)
    assert verdict and verdict.partial


def test_map():
    a = periodic([0, 2])
    assert a.map(identity_hom()) == a
    q = a.map(embed_hom(QQ))
    assert q.ring == QQ and all(isinstance(v, Fraction) for v in q.values)
    b = periodic([z3, z3 * z3, 1])
    assert b.map(galois_hom(2)) == periodic([z3 * z3, z3, 1])


@settings(max_examples=50, deadline=None)
@given(periodic_vectors(), periodic_vectors(), periodic_vectors())
def test_componentwise_ring_axioms(a, b, c):
    one = periodic([1], ring=QQ)
    assert (a + b) + c == a + (b + c) and a + b == b + a
    assert (a * b) * c == a * (b * c) and a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a * one == a and a + (-a) == periodic([0], ring=QQ)


@settings(max_examples=40, deadline=None)
@given(periodic_vectors(), periodic_vectors(), st.integers(1, 12))
def test_frobenius_is_a_ring_homomorphism(a, b, r):
    assert (a * b).F(r) == a.F(r) * b.F(r)
    assert (a + b).F(r) == a.F(r) + b.F(r)


def test_verschiebung_is_not_multiplicative():
    a = periodic([1], ring=QQ)
    assert a.V(2) * a.V(2) != (a * a).V(2)


@settings(max_examples=25, deadline=None)
@given(periodic_vectors())
def test_operator_identities_all_r_s(a):
    for r in range(1, 13):
        for s in range(1, 13):
            for label, ok in operator_identities(a, r, s):
                assert ok, f"{label} at r={r}, s={s}"


@settings(max_examples=40, deadline=None)
@given(periodic_vectors(max_period=12), st.integers(1, 30))
def test_frobenius_shrinks_period(a, r):
    c = a.period
    assert a.F(r).has_period(c // gcd(c, r))


@settings(max_examples=40, deadline=None)
@given(periodic_vectors(max_period=12), st.integers(1, 30))
def test_frobenius_fixed_point_witness(a, r):
    c = a.period
    if gcd(c, r) != 1:
        return
    # Bezout p*c + q*r = 1 with q > 0, then s = q*r is a multiple of r with F_s(a) = a
    q = next(q for q in range(1, c + 1) if (q * r) % c == 1 % c)
    s = q * r
    assert s % r == 0 and a.F(s) == a


def test_minimal_period():
    assert GhostVec([1, 2, 1, 2, 1, 2], period=6).minimal_period() == 2
    assert GhostVec([4, 4, 4, 4], period=4).minimal_period() == 1
    assert GhostVec([0, 6, 3, 6, 0, 9], period=6).minimal_period() == 6


def test_json_round_trip():
    for a in (periodic([1, Fraction(1, 2)]), truncated([z3, 1], ring=cyclotomic_ring(3))):
        assert GhostVec.from_json(a.to_json()) == a
    with pytest.raises(ParseError):
        GhostVec.from_json({"repr": "loop", "values": []})


def test_periodic_and_truncated_never_compare_equal():
    assert periodic([1]) != truncated([1])
    assert periodic([1, 2]) == periodic([1, 2, 1, 2])
    assert truncated([1, 2]) != truncated([1, 2, 3])
