from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from realzeros.poly import MultiPoly

NV = 3


def polys(nvars=NV, max_terms=5, max_exp=3):
    term = st.tuples(st.tuples(*[st.integers(0, max_exp)] * nvars), st.integers(-6, 6))
    return st.lists(term, max_size=max_terms).map(lambda ts: MultiPoly(nvars, dict(ts)))


points = st.tuples(*[st.fractions(min_value=-3, max_value=3, max_denominator=4)] * NV)


def test_no_stored_zeros():
    p = MultiPoly(2, {(1, 0): 3, (0, 1): 0})
    assert len(p) == 1
    x, y = MultiPoly.gens(2)
    assert (x - x).is_zero()
    assert (x + y - y) == x


@settings(max_examples=150, deadline=None)
@given(polys(), polys(), points)
def test_evaluation_is_a_ring_map(p, q, pt):
    assert (p + q).evaluate(pt) == p.evaluate(pt) + q.evaluate(pt)
    assert (p * q).evaluate(pt) == p.evaluate(pt) * q.evaluate(pt)
    assert (p - q).evaluate(pt) == p.evaluate(pt) - q.evaluate(pt)


@settings(max_examples=150, deadline=None)
@given(polys(), polys(), polys())
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


@settings(max_examples=150, deadline=None)
@given(polys(), polys())
def test_exact_division_round_trip(p, q):
    if q.is_zero():
        return
    assert (p * q).exact_div(q) == p


def test_exact_division_remainder_raises():
    x, y = MultiPoly.gens(2)
    with pytest.raises(ArithmeticError):
        (x * x + 1).exact_div(x)


def test_scalar_ops_and_pow():
    x, y = MultiPoly.gens(2)
    p = (x + 2 * y) ** 3
    assert p.evaluate((1, 1)) == 27
    assert (1 - x).evaluate((Fraction(1, 2), 0)) == Fraction(1, 2)
    assert MultiPoly.constant(5, 2) == 5
    assert p.degree() == 3


def test_zero_vars_and_permute():
    x, y, z = MultiPoly.gens(3)
    p = x * y + z
    assert p.zero_vars([0]) == z
    assert p.permute([2, 1, 0]) == z * y + x


def test_text_rendering():
    x, y = MultiPoly.gens(2)
    assert (x * x - 2 * x * y + 3).to_text() == "z1^2 - 2*z1*z2 + 3"
    assert MultiPoly(2).to_text() == "0"


def test_hash_consistent_with_eq():
    x, y = MultiPoly.gens(2)
    assert hash(x + y) == hash(y + x)
