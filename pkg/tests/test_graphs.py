
import pytest
from hypothesis import given, strategies as st

from realzeros.exact import falling_factorial
from realzeros.graphs import (
    PairMultiset,
    b_recurrence_comparison,
    b_row,
    b_table,
    cancellation_check,
    count_table,
    disagreements,
    enumerate_A0,
    enumerate_A1,
    enumerate_pairs,
    forest_count_check,
    pair_sign,
    selection_sign,
    selections,
    tournament_property_check,
)


def test_pair_multiset_canonical():
    a = PairMultiset([(3, 1), (2, 1)], 3)
    b = PairMultiset([(1, 2), (1, 3)], 3)
    assert a == b and a.pairs == ((1, 2), (1, 3))
    assert a.support == 3 and not a.has_repeat
    assert PairMultiset([(1, 2), (2, 1)], 2).has_repeat
    assert a.pair_product().evaluate((0, 1, 2)) == 2
    with pytest.raises(ValueError):
        PairMultiset([(1, 1)], 3)
    with pytest.raises(ValueError):
        PairMultiset([(1, 4)], 3)


def test_enumerate_pairs_counts():
    assert len(list(enumerate_pairs(1, 2))) == 1
    assert len(list(enumerate_pairs(1, 3))) == 3
    assert len(list(enumerate_pairs(2, 3))) == 6
    assert len(list(enumerate_pairs(2, 3, distinct=True))) == 3
    assert len(list(enumerate_pairs(2, 4))) == 21


def test_selections_and_signs():
    beta = PairMultiset([(1, 2)], 2)
    assert sorted(selections(beta)) == [((1,), 1), ((2,), -1)]
    beta = PairMultiset([(1, 2), (2, 4), (1, 3)], 4)
    sels = list(selections(beta))
    assert len(sels) == 8
    for c1, s1 in sels:
        assert selection_sign(beta, c1) == s1
        assert disagreements(c1, c1) == ()
        for c2, s2 in sels:
            assert s1 * s2 == pair_sign(c1, c2)


def test_tournament_property():
    for v in range(2, 6):
        r = tournament_property_check(v)
        assert r.holds
        assert r.lhs == 2 ** (v * (v - 1) // 2)


def test_cancellation_vertex_disjoint_part():
    # the disjoint-pair part of the sum always vanishes
    for k, n in [(1, 3), (2, 3), (2, 4), (3, 4)]:
        notes = cancellation_check(k, n).notes
        assert "sum over vertex-disjoint beta only is zero: True" in notes


def test_cancellation_k1_vacuous():
    assert cancellation_check(1, 4).holds


def test_cancellation_k2_residue_pinned():
    # the full |I| >= 2 sum does not vanish for k = 2; pin the observed value
    r = cancellation_check(2, 3)
    assert not r.holds
    assert r.lhs.evaluate((1, 2, 3)) == -224
    assert r.to_dict()["witness"]["params"] == {"k": 2, "n": 3}


def test_b_rows():
    assert b_row(1) == (1,)
    assert b_row(2) == (3, 1)
    assert b_row(3) == (16, 9, 1)
    assert b_table(3) == {1: (1,), 2: (3, 1), 3: (16, 9, 1)}
    with pytest.raises(ValueError):
        b_table(13)


@given(st.integers(1, 8), st.integers(-10, 30))
def test_b_basis_identity(k, x):
    assert sum(b * falling_factorial(x - k - 1, h) for h, b in enumerate(b_row(k))) == x ** (k - 1)


def test_b_first_column_is_cayley():
    # h = 0: trees on k+1 labeled vertices
    for k in range(1, 9):
        assert b_row(k)[0] == (k + 1) ** (k - 1)
        assert b_row(k)[-1] == 1


def test_recurrence_comparison():
    comp = b_recurrence_comparison(8)
    assert comp[0] == (1, (1,), (2,), False)
    assert all(agree for _, _, _, agree in comp[1:])


def test_class_counts_examples():
    assert enumerate_A1(1, 0) == 1
    assert enumerate_A1(2, 0) == 3
    assert enumerate_A1(2, 1) == 1
    assert enumerate_A0(1, 0) == 1
    assert enumerate_A0(2, 0) == 3
    assert enumerate_A0(2, 1) == 1
    with pytest.raises(ValueError):
        enumerate_A1(2, 2)


def test_class_counts_equal_b():
    for k in range(1, 5):
        for h in range(k):
            assert enumerate_A1(k, h) == enumerate_A0(k, h) == b_row(k)[h]


def test_forest_count_examples():
    r = forest_count_check(1, 3, "A0-total")
    assert r.holds and r.lhs == 2
    r = forest_count_check(1, 2, "A1-total")
    assert r.holds and r.lhs == 1
    r = forest_count_check(2, 3, "A1-total")
    assert r.holds and r.lhs == 3
    with pytest.raises(ValueError):
        forest_count_check(2, 3, "A2-total")
    with pytest.raises(ValueError):
        forest_count_check(3, 3, "A1-total")


def test_forest_counts_grid():
    for k in range(1, 4):
        for n in range(k + 1, 7):
            assert forest_count_check(k, n, "A1-total").holds
            assert forest_count_check(k, n, "A0-total").holds


def test_count_table_rows():
    rows = {(r[0], r[1]): r[2:] for r in count_table(4)}
    assert rows[(1, 0)] == (1, 1, 1, 2, False)
    assert rows[(2, 0)] == (3, 3, 3, 3, True)
    assert rows[(3, 1)] == (9, 9, 9, 9, True)
    top = count_table(6, enum_max=3)
    assert top[-1][3] is None and top[-1][6]
