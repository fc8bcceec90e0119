from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rds_enum.errors import InvalidOrder, InvalidVertex, OrderTooLarge
from rds_enum.graph_core import (
    BRUTE_LIMIT_ENV,
    CoefficientRow,
    GraphSpec,
    brute_force_limit,
    complement_component_sizes,
    count_rds_by_cardinality,
    enumerate_rds,
    is_restrained_dominating,
    make_cycle,
    make_path,
)


def test_make_cycle_edges():
    assert make_cycle(3).edges == {(1, 2), (2, 3), (1, 3)}
    assert make_cycle(4).edges == {(1, 2), (2, 3), (3, 4), (1, 4)}
    for n in range(3, 12):
        assert len(make_cycle(n).edges) == n


@pytest.mark.parametrize("n", [-1, 0, 1, 2])
def test_make_cycle_rejects_small(n):
    with pytest.raises(InvalidOrder):
        make_cycle(n)


def test_make_path_edges():
    assert make_path(1).edges == frozenset()
    assert make_path(2).edges == {(1, 2)}
    assert make_path(5).edges == {(1, 2), (2, 3), (3, 4), (4, 5)}
    with pytest.raises(InvalidOrder):
        make_path(0)


def test_graphspec_validation():
    with pytest.raises(ValueError):
        GraphSpec.from_edges(3, [(1, 1)])
    with pytest.raises(InvalidVertex):
        GraphSpec.from_edges(3, [(1, 4)])
    with pytest.raises(ValueError):
        GraphSpec.from_edges(3, [(1, 2), (2, 1)])


def test_predicate_examples():
    assert all(is_restrained_dominating(make_cycle(3), [v]) for v in (1, 2, 3))
    for n in range(3, 10):
        assert is_restrained_dominating(make_cycle(n), range(1, n + 1))
    assert not is_restrained_dominating(make_cycle(4), [1])
    assert not is_restrained_dominating(make_cycle(5), [])
    with pytest.raises(InvalidVertex):
        is_restrained_dominating(make_cycle(4), [5])


def test_enumerate_examples():
    c4, c5 = make_cycle(4), make_cycle(5)
    assert enumerate_rds(c4, 2) == [(1, 2), (1, 4), (2, 3), (3, 4)]
    assert enumerate_rds(c5, 3) == [(1, 2, 3), (1, 2, 5), (1, 4, 5), (2, 3, 4), (3, 4, 5)]
    assert enumerate_rds(c5, 2) == []


def test_count_examples():
    assert count_rds_by_cardinality(make_cycle(6)).as_dict() == {2: 3, 4: 6, 6: 1}
    assert count_rds_by_cardinality(make_cycle(9)).as_dict() == {3: 3, 5: 18, 7: 9, 9: 1}


def test_path_p3_against_subset_sweep():
    p3 = make_path(3)
    by_size: dict[int, int] = {}
    for mask in range(8):
        s = [v for v in (1, 2, 3) if mask >> (v - 1) & 1]
        if is_restrained_dominating(p3, s):
            by_size[len(s)] = by_size.get(len(s), 0) + 1
    assert by_size == {3: 1}
    assert count_rds_by_cardinality(p3).as_dict() == by_size


def test_component_sizes_examples():
    assert complement_component_sizes(make_cycle(6), [1, 4]) == (2, 2)
    assert complement_component_sizes(make_cycle(7), range(1, 8)) == ()
    assert complement_component_sizes(make_cycle(4), [1, 3]) == (1, 1)
    assert not is_restrained_dominating(make_cycle(4), [1, 3])


@pytest.mark.parametrize("n", range(3, 13))
def test_enumeration_is_exhaustive(n):
    g = make_cycle(n)
    for i in range(n + 1):
        expected = [c for c in combinations(range(1, n + 1), i) if is_restrained_dominating(g, c)]
        assert enumerate_rds(g, i) == expected


@pytest.mark.parametrize("n", range(3, 17))
def test_lemma5_and_parity_on_oracle(n):
    g = make_cycle(n)
    row = count_rds_by_cardinality(g)
    assert all((n - i) % 2 == 0 for i in row)
    assert enumerate_rds(g, n) == [tuple(range(1, n + 1))]
    for i in row:
        sets = enumerate_rds(g, i)
        assert len(sets) == row[i]
        for s in sets:
            assert complement_component_sizes(g, s) == (2,) * ((n - i) // 2)


@settings(max_examples=300)
@given(st.integers(3, 14).flatmap(lambda n: st.tuples(st.just(n), st.sets(st.integers(1, n)))))
def test_cycle_rds_iff_complement_is_k2s(case):
    n, s = case
    g = make_cycle(n)
    sizes = complement_component_sizes(g, s)
    assert is_restrained_dominating(g, s) == all(k == 2 for k in sizes)


def test_brute_force_limit(monkeypatch):
    monkeypatch.delenv(BRUTE_LIMIT_ENV, raising=False)
    assert brute_force_limit() == 26
    monkeypatch.setenv(BRUTE_LIMIT_ENV, "10")
    assert brute_force_limit() == 10
    assert brute_force_limit(12) == 12
    with pytest.raises(OrderTooLarge):
        enumerate_rds(make_cycle(11), 5)
    assert len(enumerate_rds(make_cycle(11), 5, force=True)) == 22


def test_coefficient_row_sparse():
    row = CoefficientRow(6, {2: 3, 3: 0, 4: 6})
    assert row.as_dict() == {2: 3, 4: 6}
    assert row[3] == 0 and row[100] == 0
    assert 3 not in row and 2 in row
    assert row.total() == 9
    with pytest.raises(ValueError):
        CoefficientRow(3, {1: -1})
