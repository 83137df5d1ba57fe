"""Character values against textbook tables, classical formulas and identities."""

from __future__ import annotations

import json
from math import factorial

import pytest
from hypothesis import given, strategies as st

from conftest import partition_pairs_st, partitions_st
from naive import S4_CLASSES, S4_TABLE, S5_CLASSES, S5_TABLE
import pvanish
from pvanish.characters import (
    TABLE_GUARD,
    centralizer_order,
    character_table,
    character_value,
    degree,
    factored_character_value,
    induced_character_value,
    merged_cycle_type,
    multi_character_value,
    _char,
)
from pvanish.partitions import conjugate, enumerate_partitions, r_decompose
from pvanish.verify import (
    conjugation_twist_suite,
    degree_column_suite,
    factorization_suite,
    multichar_suite,
    orthogonality_suite,
)


# ---------------------------------------------------------------------------
# textbook tables and classical formulas
# ---------------------------------------------------------------------------


def test_s4_table_reproduced():
    for alpha, row in S4_TABLE.items():
        for beta in S4_CLASSES:
            assert character_value(alpha, beta) == row[beta], (alpha, beta)


def test_s5_table_reproduced():
    for alpha, row in S5_TABLE.items():
        for beta in S5_CLASSES:
            assert character_value(alpha, beta) == row[beta], (alpha, beta)


@pytest.mark.parametrize("n", range(0, 11))
def test_trivial_sign_and_standard_characters(n):
    for beta in enumerate_partitions(n):
        assert character_value((n,) if n else (), beta) == 1
        assert character_value((1,) * n, beta) == (-1) ** (n - len(beta))
        if n >= 2:
            fixed = sum(1 for c in beta if c == 1)
            assert character_value((n - 1, 1), beta) == fixed - 1


def test_known_values():
    assert character_value((3, 3, 2), (4, 2, 1, 1)) == -2
    assert character_value((5,), (3, 2)) == 1
    assert character_value((1, 1, 1), (3,)) == 1
    assert degree((3, 3, 2)) == 42


@given(partition_pairs_st(max_n=18))
def test_peeling_order_is_irrelevant(pair):
    alpha, beta = pair
    assert character_value(alpha, beta) == character_value(
        alpha, beta, largest_first=False
    )


@pytest.mark.parametrize("n", range(0, 13))
def test_degree_equals_identity_column(n):
    identity = (1,) * n
    for alpha in enumerate_partitions(n):
        assert degree(alpha) == character_value(alpha, identity)


def test_degree_of_staircase_family():
    # deg(n-3,2,1) = n(n-2)(n-4)/3 for n >= 6
    for n in range(6, 17):
        assert degree((n - 3, 2, 1)) == n * (n - 2) * (n - 4) // 3


def test_value_rejects():
    with pytest.raises(ValueError):
        character_value((3, 1), (3,))
    with pytest.raises(ValueError):
        character_value((2,), (1, 0, 1))


# ---------------------------------------------------------------------------
# orthogonality, twist, centralizers
# ---------------------------------------------------------------------------


def test_orthogonality_small():
    result = orthogonality_suite(8)
    assert result.passed and result.checks > 0


def test_degree_column_suite_small():
    result = degree_column_suite(10)
    assert result.passed and result.checks > 0


def test_conjugation_twist_suite_small():
    result = conjugation_twist_suite(9)
    assert result.passed and result.checks > 0


@given(partition_pairs_st(max_n=14))
def test_conjugation_twist_random(pair):
    alpha, beta = pair
    n = sum(alpha)
    assert character_value(conjugate(alpha), beta) == (-1) ** (
        n - len(beta)
    ) * character_value(alpha, beta)


@pytest.mark.parametrize("n", range(0, 11))
def test_class_sizes_sum_to_group_order(n):
    assert sum(
        factorial(n) // centralizer_order(b) for b in enumerate_partitions(n)
    ) == factorial(n)


def test_centralizer_known_values():
    assert centralizer_order((1, 1, 1, 1)) == 24
    assert centralizer_order((2, 2, 1)) == 8
    assert centralizer_order((5,)) == 5
    assert centralizer_order(()) == 1


# ---------------------------------------------------------------------------
# factorization through core and quotient
# ---------------------------------------------------------------------------


def test_factorization_suite_small():
    result = factorization_suite(9)
    assert result.passed and result.checks > 0


def test_factorization_example_by_hand():
    alpha = (3, 3, 2)
    dec = r_decompose(alpha, 2)
    for gamma in enumerate_partitions(dec.weight):
        for lam in enumerate_partitions(8 - 2 * dec.weight):
            merged = merged_cycle_type(2, gamma, lam)
            assert factored_character_value(alpha, 2, gamma, lam) == character_value(
                alpha, merged
            )


def test_merged_cycle_type():
    assert merged_cycle_type(2, (2, 1), (3, 1)) == (4, 3, 2, 1)
    assert merged_cycle_type(3, (), (1, 1)) == (1, 1)


def test_factored_value_rejects():
    # (3,3,2) has 2-weight 4 and empty 2-core
    with pytest.raises(ValueError):
        factored_character_value((3, 3, 2), 2, (3,), ())  # gamma not of weight
    with pytest.raises(ValueError):
        factored_character_value((3, 3, 2), 2, (4,), (1,))  # lam wrong size


# ---------------------------------------------------------------------------
# label tuples
# ---------------------------------------------------------------------------


def test_multichar_suite_small():
    result = multichar_suite(6)
    assert result.passed and result.checks > 0


@given(partition_pairs_st(max_n=12))
def test_single_component_tuple_matches_plain_value(pair):
    alpha, beta = pair
    assert multi_character_value((alpha,), beta) == character_value(alpha, beta)


@given(partition_pairs_st(max_n=10))
def test_empty_components_are_inert(pair):
    alpha, beta = pair
    assert multi_character_value(((), alpha, ()), beta) == character_value(alpha, beta)


def test_empty_tuple_on_empty_class():
    assert multi_character_value((), ()) == 1
    assert induced_character_value((), ()) == 1


def test_multi_value_rejects_size_mismatch():
    with pytest.raises(ValueError):
        multi_character_value(((2,), (1,)), (2,))
    with pytest.raises(ValueError):
        induced_character_value(((2,), (1,)), (2,))


def test_induced_value_known():
    # two trivial components: value counts the splittings of the class
    assert induced_character_value(((1,), (1,)), (1, 1)) == 2
    assert multi_character_value(((1,), (1,)), (1, 1)) == 2
    assert induced_character_value(((1,), (1,)), (2,)) == 0


# ---------------------------------------------------------------------------
# tables and caches
# ---------------------------------------------------------------------------


def test_character_table_matches_hardcoded_s5():
    table = character_table(5)
    assert table.labels == tuple(S5_CLASSES)
    for i, alpha in enumerate(table.labels):
        for j, beta in enumerate(table.labels):
            assert table.values[i][j] == S5_TABLE[alpha][beta]


def test_character_table_guard():
    with pytest.raises(ValueError):
        character_table(TABLE_GUARD + 1)
    # explicit limit overrides
    character_table(4, limit=4)


def test_character_table_json_roundtrip():
    table = character_table(4)
    payload = json.loads(table.to_json())
    assert payload["schema_version"] == 1
    assert payload["n"] == 4
    assert [tuple(l) for l in payload["labels"]] == list(table.labels)
    assert [tuple(r) for r in payload["values"]] == list(table.values)


def test_character_table_text_is_deterministic():
    first = character_table(5).to_text()
    second = character_table(5).to_text()
    assert first == second
    assert "(3,1,1)" in first
    # every row has the same rendered width
    widths = {len(line) for line in first.splitlines()}
    assert len(widths) == 1


def test_clear_caches_recomputes_identically():
    before = character_value((4, 3, 1), (3, 3, 2))
    pvanish.clear_caches()
    assert _char.cache_info().currsize == 0
    assert character_value((4, 3, 1), (3, 3, 2)) == before
