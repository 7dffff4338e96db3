"""
Tests for the five counting methods.
"""

from fractions import Fraction

import pytest

from alcuin.counting import methods
from alcuin.counting.methods import (
    MOD12_TABLE,
    CountMethod,
    bruteforce_table,
    count,
    count_bruteforce,
    count_closed_form,
    count_mod12,
    count_series,
    count_sum,
    first_odd_shift_failure,
    mod12_row,
    residue_row_sum,
)

SEQUENCE = [0, 0, 0, 1, 0, 1, 1, 2, 1, 3, 2, 4, 3, 5, 4, 7, 5, 8, 7, 10, 8, 12, 10, 14, 12]

ALL_METHODS = [count_closed_form, count_mod12, count_sum, count_series, count_bruteforce]


class TestClosedForm:
    """Test the nearest-integer closed form."""

    def test_examples(self):
        assert count_closed_form(12) == 3
        assert count_closed_form(3) == 1
        assert count_closed_form(4) == 0
        assert count_closed_form(100) == 208

    def test_small_perimeters_are_zero(self):
        assert count_closed_form(1) == 0
        assert count_closed_form(2) == 0

    def test_growth_envelope(self):
        for p in range(3, 10_001):
            deviation = abs(count_closed_form(p) - Fraction(p * p, 48))
            assert deviation <= Fraction(1, 2) + Fraction(6 * p, 48) + Fraction(9, 48)


class TestMod12:
    """Test the residue table."""

    def test_table_shape(self):
        assert len(MOD12_TABLE) == 12
        assert [row.residue for row in MOD12_TABLE] == list(range(12))

    def test_table_rows(self):
        expected = [
            (0, 0), (2, 0), (1, 0), (3, 1), (2, 0), (4, 1),
            (3, 1), (5, 2), (4, 1), (6, 3), (5, 2), (7, 4),
        ]
        assert [(row.k1, row.k0) for row in MOD12_TABLE] == expected

    def test_examples(self):
        assert count_mod12(23) == 14
        assert count_mod12(12) == 3
        assert count_mod12(13) == 5
        assert count_mod12(4) == 0

    def test_row_lookup(self):
        assert mod12_row(11).evaluate(1) == 14
        with pytest.raises(ValueError):
            mod12_row(12)
        with pytest.raises(ValueError):
            mod12_row(-1)

    def test_small_perimeters_match_oracle(self):
        for p in range(1, 40):
            assert count_mod12(p) == count_bruteforce(p)

    def test_row_sum_identity(self):
        for n in range(0, 201):
            assert residue_row_sum(n) == 3 * n * n + 2 * n
            assert residue_row_sum(n) == count_mod12(12 * n + 1)


class TestBijectionSum:
    """Test the double sum over (c, a)."""

    def test_examples(self):
        assert count_sum(12) == 3
        assert count_sum(10) == 2
        assert count_sum(1) == 0

    def test_floor_lower_limit_adds_only_zero_terms(self):
        for p in range(4, 3000):
            if p % 3 == 0:
                continue
            c = p // 3
            assert (p - c) // 2 - (p - 2 * c) + 1 == 0

    def test_matches_oracle(self):
        for p in range(1, 300):
            assert count_sum(p) == count_bruteforce(p)


class TestBruteForce:
    """Test the oracle."""

    def test_examples(self):
        assert count_bruteforce(9) == 3
        assert count_bruteforce(5) == 1
        assert count_bruteforce(2) == 0

    def test_sequence_prefix(self):
        assert [0] + [count_bruteforce(p) for p in range(1, 25)] == SEQUENCE

    def test_table_matches_single_counts(self):
        table = bruteforce_table(400)
        assert table[:25] == SEQUENCE
        assert table == [0] + [count_bruteforce(p) for p in range(1, 401)]

    def test_python_and_numpy_rows_agree(self, monkeypatch):
        python_counts = [count_bruteforce(p) for p in range(1, 61)]
        monkeypatch.setattr(methods, "_PYTHON_BRUTE_FORCE_LIMIT", 0)
        numpy_counts = [count_bruteforce(p) for p in range(1, 61)]
        assert python_counts == numpy_counts == bruteforce_table(60)[1:]

    def test_table_edge_sizes(self):
        assert bruteforce_table(0) == [0]
        assert bruteforce_table(3) == [0, 0, 0, 1]
        with pytest.raises(ValueError):
            bruteforce_table(-1)


class TestDispatch:
    """Test the method selector and dispatcher."""

    def test_dispatch(self):
        assert count(12, CountMethod.CLOSED_FORM) == 3
        assert count(12, CountMethod.BRUTE_FORCE) == 3
        assert count(12, CountMethod.MOD12) == 3
        assert count(12, CountMethod.SERIES) == 3
        assert count(12, CountMethod.BIJECTION_SUM) == 3

    def test_default_method(self):
        assert count(23) == 14

    def test_parse_is_case_insensitive(self):
        assert CountMethod.parse("MOD12") is CountMethod.MOD12
        assert CountMethod.parse("ClosedForm") is CountMethod.CLOSED_FORM
        assert CountMethod.parse("bijection_sum") is CountMethod.BIJECTION_SUM
        assert CountMethod.parse("Brute-Force") is CountMethod.BRUTE_FORCE

    def test_parse_unknown(self):
        with pytest.raises(ValueError):
            CountMethod.parse("fourier")

    @pytest.mark.parametrize("fn", ALL_METHODS)
    def test_rejects_non_positive_perimeter(self, fn):
        with pytest.raises(ValueError):
            fn(0)


class TestMethodAgreement:
    """All five methods against the oracle."""

    def test_agreement_small_range(self):
        for p in range(1, 401):
            expected = count_bruteforce(p)
            for fn in ALL_METHODS[:-1]:
                assert fn(p) == expected, (fn.__name__, p)

    def test_edge_pins(self):
        for fn in ALL_METHODS:
            assert fn(1) == 0
            assert fn(2) == 0
            assert fn(4) == 0

    def test_fast_methods_agree_to_ten_thousand(self):
        oracle = bruteforce_table(10_000)
        for p in range(1, 10_001):
            assert count_closed_form(p) == oracle[p]
            assert count_mod12(p) == oracle[p]


class TestOddShift:
    """T(p) = T(p + 3) for odd p."""

    def test_identity_holds(self):
        assert first_odd_shift_failure(999) is None
        for p in range(1, 200, 2):
            assert count_closed_form(p) == count_closed_form(p + 3)

    def test_even_perimeters_do_shift(self):
        assert count_closed_form(10) != count_closed_form(13)

    def test_invalid_limit(self):
        with pytest.raises(ValueError):
            first_odd_shift_failure(0)
