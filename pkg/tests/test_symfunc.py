from itertools import combinations, permutations
from math import prod

import pytest
from hypothesis import given, settings, strategies as st

from realzeros.exact import det_fraction_free
from realzeros.hermite import power_sums_from_elementary
from realzeros.poly import MultiPoly
from realzeros.symfunc import (
    EmptyDomainError,
    d_det,
    elementary,
    elementary_incomplete,
    f_geom,
    monomial2,
    monomial_fn,
    monomial_incomplete,
    power_sum,
    schur,
    vandermonde_D,
    vandermonde_matrix,
    z,
)

PT = (0, 1, 2)


def rationals(n):
    return st.tuples(*[st.fractions(min_value=-4, max_value=4, max_denominator=5)] * n)


# numeric oracles built straight from the definitions


def e_num(k, xs):
    return sum(prod(c) for c in combinations(xs, k))


def mono_num(d, xs):
    return sum(prod(xs[b] ** e for b, e in zip(bs, d)) for bs in permutations(range(len(xs)), len(d)))


def test_elementary_examples():
    assert elementary(1, 2) == z(1, 2) + z(2, 2)
    assert elementary(0, 5) == 1
    assert elementary(2, 3) == z(1, 3) * z(2, 3) + z(1, 3) * z(3, 3) + z(2, 3) * z(3, 3)
    assert elementary(4, 3).is_zero()


def test_power_sum_examples():
    assert power_sum(0, 3) == 3
    assert power_sum(2, 2) == z(1, 2) ** 2 + z(2, 2) ** 2
    assert power_sum(2, 3).evaluate(PT) == 5


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5).flatmap(lambda n: st.tuples(st.just(n), rationals(n))))
def test_elementary_and_power_sums_pointwise(case):
    n, xs = case
    for k in range(n + 1):
        assert elementary(k, n).evaluate(xs) == e_num(k, xs)
        assert power_sum(k, n).evaluate(xs) == (n if k == 0 else sum(x**k for x in xs))


def test_newton_girard_symbolic():
    for n in range(1, 6):
        e = [elementary(k, n) for k in range(n + 1)]
        ps = power_sums_from_elementary(e, 2 * n)
        for k in range(1, 2 * n + 1):
            assert ps[k] == power_sum(k, n)


def test_monomial_examples():
    assert monomial_fn((2,), 3) == power_sum(2, 3)
    assert monomial_fn((1, 1), 2) == 2 * z(1, 2) * z(2, 2)
    assert monomial_fn((2, 0), 3) == 2 * power_sum(2, 3)
    with pytest.raises(EmptyDomainError):
        monomial_fn((1, 1, 1), 2)


@settings(max_examples=40, deadline=None)
@given(rationals(4), st.lists(st.integers(0, 3), min_size=1, max_size=3))
def test_monomial_pointwise(xs, d):
    assert monomial_fn(d, 4).evaluate(xs) == mono_num(d, xs)


def test_monomial_symmetric():
    p = monomial_fn((3, 1, 1), 4)
    for perm in permutations(range(4)):
        assert p.permute(list(perm)) == p


def test_monomial2_examples():
    for n in (2, 3, 4):
        assert monomial2(0, 2, n) == elementary(2, n)
        assert monomial2(1, 0, n) == power_sum(2, n)
    assert monomial2(1, 0, 3).evaluate(PT) == 5
    with pytest.raises(EmptyDomainError):
        monomial2(2, 2, 3)


def test_elementary_incomplete_examples():
    assert elementary_incomplete(1, {1}, 3) == z(2, 3) + z(3, 3)
    assert elementary_incomplete(0, (1, 2), 3) == 1
    assert elementary_incomplete(2, (1, 2), 3).is_zero()


def test_e_inc_single_index_recurrence():
    for n in range(1, 6):
        for i in range(1, n + 1):
            for k in range(n + 1):
                rhs = sum(((-1) ** h) * z(i, n) ** h * elementary(k - h, n) for h in range(k + 1))
                assert elementary_incomplete(k, (i,), n) == rhs


def test_e_inc_pair_expansion():
    for n in range(2, 6):
        for i, j in combinations(range(1, n + 1), 2):
            for k in range(n + 1):
                rhs = sum(((-1) ** h) * f_geom(h, z(i, n), z(j, n)) * elementary(k - h, n) for h in range(k + 1))
                assert elementary_incomplete(k, (i, j), n) == rhs


def test_monomial_incomplete_examples():
    assert monomial_incomplete((), 1, 2, 3) == 1
    assert monomial_incomplete((1,), 1, 2, 3) == z(3, 3)
    assert monomial_incomplete((1,), 1, 3, 3) == z(2, 3)


def test_vandermonde_examples():
    assert vandermonde_D([z(1, 1)]) == 1
    assert vandermonde_D([z(1, 2), z(2, 2)]) == z(2, 2) - z(1, 2)
    assert vandermonde_D([z(i, 3) for i in (1, 2, 3)]).evaluate(PT) == 2


def test_schur_examples():
    x = MultiPoly.gens(2)
    assert schur([z(1, 1)], (3,)) == z(1, 1) ** 3
    assert schur(x, (0, 2)) == x[0] + x[1]
    assert schur(x, (1, 2)) == x[0] * x[1]
    with pytest.raises(ValueError):
        schur(x, (2, 1))


def test_schur_times_vandermonde_is_alternant():
    xs = MultiPoly.gens(3)
    for lam in combinations(range(6), 3):
        assert schur(xs, lam) * vandermonde_D(xs) == det_fraction_free(vandermonde_matrix(xs, lam))


def test_schur_staircase_is_one():
    xs = MultiPoly.gens(4)
    assert schur(xs, (0, 1, 2, 3)) == 1


def test_f_geom():
    x1, x2 = MultiPoly.gens(2)
    assert f_geom(0, x1, x2) == 1
    assert f_geom(2, x1, x2) == x1**2 + x1 * x2 + x2**2
    assert f_geom(1, 0, 1) == 1
    # (x1 - x2) f_{k-1} = x1^k - x2^k
    for k in range(1, 6):
        assert (x1 - x2) * f_geom(k - 1, x1, x2) == x1**k - x2**k


def test_d_det():
    assert d_det([2], 3) == z(2, 3)
    assert d_det([2, 2], 3).is_zero()
    assert d_det([2, 3], 3).evaluate(PT) == 2


@given(rationals(3))
def test_d_det_is_scaled_vandermonde(xs):
    # det[x_b^v] over v = 1..k equals prod x_b times D
    want = prod(xs) * prod(xs[b] - xs[a] for a, b in combinations(range(3), 2))
    assert d_det([1, 2, 3], 3).evaluate(xs) == want
