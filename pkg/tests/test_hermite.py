from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from realzeros.exact import det_fraction_free, leading_minors
from realzeros.hermite import (
    UniPoly,
    Verdict,
    classify_real_roots,
    coeffs_to_elementary,
    hermite_matrix,
    hermite_minors,
    newton_girard,
    symbolic_power_sums,
    verdict_from_minors,
)


def test_unipoly_basics():
    p = UniPoly([2, -3, 1])
    assert p.degree == 2
    assert p(1) == 0 and p(2) == 0
    assert UniPoly([2, 4, 0, 0]).degree == 1
    with pytest.raises(ValueError):
        UniPoly([0, 0])
    assert UniPoly.from_roots([1, 2]) == p
    assert UniPoly([2, 4, 2]).monic() == UniPoly([1, 2, 1])


def test_coeffs_to_elementary():
    assert coeffs_to_elementary(UniPoly([2, -3, 1])) == [1, 3, 2]
    assert coeffs_to_elementary(UniPoly([1, 0, 1])) == [1, 0, 1]
    assert coeffs_to_elementary(UniPoly([0, 0, 0, 0, 1])) == [1, 0, 0, 0, 0]


def test_newton_girard_examples():
    assert newton_girard(UniPoly([2, -3, 1]), 3) == [2, 3, 5, 9]
    assert newton_girard(UniPoly([1, 0, 1]), 2) == [2, 0, -2]
    assert newton_girard(UniPoly([5, 1, 1, 1]), 0) == [3]


@settings(max_examples=80, deadline=None)
@given(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=6), min_size=1, max_size=6))
def test_newton_girard_matches_direct_powers(roots):
    ps = newton_girard(UniPoly.from_roots(roots), 8)
    assert ps == [len(roots)] + [sum(r**k for r in roots) for k in range(1, 9)]


def test_hermite_matrix_examples():
    ps = newton_girard(UniPoly.from_roots([0, 1, 2]), 4)
    assert hermite_matrix(ps) == [[3, 3, 5], [3, 5, 9], [5, 9, 17]]
    assert hermite_matrix(ps, (2,)) == [[5]]
    assert hermite_matrix(newton_girard(UniPoly.from_roots([1, 2]), 2)) == [[2, 3], [3, 5]]
    with pytest.raises(ValueError):
        hermite_matrix(ps, (3, 4))


def test_hermite_symbolic_vs_numeric():
    for roots in ([0, 1, 2], [Fraction(1, 2), -3, 4, 7], [1, 1, 2, -1, 5]):
        n = len(roots)
        sym = hermite_matrix(symbolic_power_sums(n, 2 * n - 2))
        num = hermite_matrix(newton_girard(UniPoly.from_roots(roots), 2 * n - 2))
        assert [[e.evaluate(roots) for e in row] for row in sym] == num


def test_leading_minor_examples():
    assert hermite_minors(UniPoly.from_roots([0, 1, 2])) == [1, 3, 6, 4]
    assert hermite_minors(UniPoly.from_roots([1, 1])) == [1, 2, 0]


def test_classify_examples():
    r = classify_real_roots(UniPoly([2, -3, 1]))
    assert r.verdict is Verdict.ALL_REAL_DISTINCT and r.minors == (1, 2, 1)
    r = classify_real_roots(UniPoly([1, 0, 1]))
    assert r.verdict is Verdict.NOT_ALL_REAL and r.minors[2] == -4 and r.witness == 2
    r = classify_real_roots(UniPoly([1, -2, 1]))
    assert r.verdict is Verdict.INCONCLUSIVE_DEGENERATE and r.witness == 2
    assert [v.exit_code for v in Verdict] == [0, 1, 2]
    with pytest.raises(ValueError):
        classify_real_roots(UniPoly([3]))


def test_verdict_prefers_negative_over_zero():
    assert verdict_from_minors([1, 3, 0, -1]).verdict is Verdict.NOT_ALL_REAL


distinct_roots = st.lists(
    st.fractions(min_value=-6, max_value=6, max_denominator=4), min_size=1, max_size=6, unique=True
)


@settings(max_examples=80, deadline=None)
@given(distinct_roots)
def test_distinct_real_roots_certified(roots):
    r = classify_real_roots(UniPoly.from_roots(roots))
    assert r.verdict is Verdict.ALL_REAL_DISTINCT
    assert all(d > 0 for d in r.minors)


@settings(max_examples=80, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=1, max_size=6))
def test_real_roots_never_give_negative_minor(roots):
    assert all(d >= 0 for d in hermite_minors(UniPoly.from_roots(roots)))


@settings(max_examples=80, deadline=None)
@given(
    st.lists(st.integers(-3, 3), max_size=4),
    st.integers(-3, 3),
    st.integers(1, 4),
)
def test_complex_pair_never_certified(real_roots, a, b):
    # (x - a)^2 + b^2 has roots a +- b i
    quad = UniPoly([a * a + b * b, -2 * a, 1])
    cs = list(quad.coeffs)
    for r in real_roots:
        nxt = [0] * (len(cs) + 1)
        for i, c in enumerate(cs):
            nxt[i + 1] += c
            nxt[i] -= r * c
        cs = nxt
    assert classify_real_roots(UniPoly(cs)).verdict is not Verdict.ALL_REAL_DISTINCT


def test_leading_minors_one_det_per_block():
    m = [[4, 1, 0], [1, 3, 1], [0, 1, 2]]
    assert leading_minors(m) == [1] + [det_fraction_free([r[:k] for r in m[:k]]) for k in (1, 2, 3)]
