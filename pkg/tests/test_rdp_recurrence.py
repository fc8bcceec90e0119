from __future__ import annotations

from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rds_enum.errors import InvalidOrder
from rds_enum.fixtures import TABLE_1
from rds_enum.graph_core import count_rds_by_cardinality, make_cycle
from rds_enum.rdp_recurrence import (
    RowWindow,
    gamma_r,
    is_empty_class,
    iter_rows,
    rdp_polynomial,
    rdp_row,
    rdp_table,
    term_count,
    total_rds_count,
)


def placements(n: int, k: int) -> int:
    """Count k-sets of C_n whose complement is (n-k)/2 disjoint K_2 blocks.

    Each of the k gaps between consecutive chosen vertices holds 0 or 1
    block, giving C(k, j) gap patterns; rotating over n positions counts
    every set k times.
    """
    if k < 1 or k > n or (n - k) % 2:
        return 0
    j = (n - k) // 2
    total = n * comb(k, j)
    assert total % k == 0
    return total // k


@pytest.mark.parametrize("n", range(3, 15))
def test_placement_formula_matches_brute_force(n):
    row = count_rds_by_cardinality(make_cycle(n))
    assert {k: placements(n, k) for k in range(n + 1) if placements(n, k)} == row.as_dict()


def test_gamma_examples():
    assert gamma_r(3) == 1
    assert gamma_r(5) == 3
    assert gamma_r(23) == 9
    assert (gamma_r(1), gamma_r(2)) == (1, 2)
    with pytest.raises(InvalidOrder):
        gamma_r(0)


def test_empty_class_examples():
    assert is_empty_class(5, 2)
    assert not is_empty_class(9, 5)
    assert is_empty_class(6, 8)


def test_row_examples():
    assert rdp_row(4).as_dict() == {2: 4, 4: 1}
    assert rdp_row(12).as_dict() == {4: 3, 6: 40, 8: 42, 10: 12, 12: 1}
    assert rdp_row(23).as_dict() == {9: 92, 11: 966, 13: 2277, 15: 2093, 17: 920, 19: 207, 21: 23, 23: 1}
    assert [rdp_row(n).as_dict() for n in (1, 2, 3)] == [{1: 1}, {2: 1}, {1: 3, 3: 1}]


def test_rows_match_published_table():
    table = rdp_table(23)
    for (n, i), value in TABLE_1.items():
        assert table[n][i] == value, (n, i)


def test_polynomial_examples():
    assert str(rdp_polynomial(3)) == "3x + x^3"
    assert str(rdp_polynomial(7)) == "7x^3 + 7x^5 + x^7"
    assert str(rdp_polynomial(1)) == "x"
    assert rdp_polynomial(7)(1) == 15
    assert rdp_polynomial(3).to_latex() == "3x + x^{3}"


def test_totals():
    assert total_rds_count(3) == 4
    assert total_rds_count(4) == 5
    assert total_rds_count(6) == 10
    for n in range(3, 61):
        assert total_rds_count(n) == rdp_row(n).total()


def test_term_count():
    assert term_count(9) == 4
    assert term_count(23) == 8
    assert term_count(3) == 2
    with pytest.raises(InvalidOrder):
        term_count(2)


def test_window_holds_three_rows():
    window = RowWindow()
    for _ in range(10):
        window.advance()
        assert len(window.rows) <= 3
    assert [r.order for r in window.rows] == [8, 9, 10]


@pytest.mark.parametrize("n", range(3, 19))
def test_oracle_equivalence(n):
    assert rdp_row(n) == count_rds_by_cardinality(make_cycle(n))


def test_rows_against_placement_formula():
    for row in iter_rows(300):
        if row.order >= 3:
            assert row.as_dict() == {
                k: placements(row.order, k) for k in range(row.order + 1) if placements(row.order, k)
            }


@given(st.integers(3, 400))
def test_polynomial_shape(n):
    p = rdp_polynomial(n)
    assert p.min_degree == gamma_r(n)
    assert p.degree == n and p.coefficient(n) == 1
    assert p.num_terms == term_count(n)
    assert all((n - i) % 2 == 0 for i, _ in p.coeffs)
    assert (gamma_r(n) % 2 == 1) == (n % 2 == 1)


@given(st.integers(3, 60), st.integers(-3, 63))
def test_emptiness_matches_coefficients(n, i):
    assert is_empty_class(n, i) == (rdp_row(n)[i] == 0)


def test_closed_forms_up_to_60():
    table = rdp_table(61)
    for k in range(1, 21):
        assert table[3 * k][k] == 3
        assert table[3 * k + 1][k + 1] == 3 * k + 1
        if k >= 2:
            assert 2 * table[3 * k - 1][k + 1] == k * (3 * k - 1)
    for n in range(3, 61):
        assert table[n][n] == 1 and table[n][n - 1] == 0 and table[n][n - 2] == n
        if n >= 5:
            assert 2 * table[n][n - 4] == n * (n - 5)


def test_arbitrary_precision():
    row = rdp_row(400)
    assert max(row.as_dict().values()) > 2**64
