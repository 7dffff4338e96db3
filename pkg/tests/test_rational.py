"""
Tests for exact rational rounding and residue arithmetic.
"""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from alcuin.core.rational import (
    ceil_rat,
    check_range,
    decompose,
    floor_rat,
    is_half_integer,
    nearest_int,
    rational,
)
from alcuin.errors import OverflowRangeError


class TestRationalConstruction:
    """Test the rational carrier."""

    def test_equality_is_by_value(self):
        assert rational(10000, 48) == rational(625, 3)
        assert rational(12, 3) == 4

    def test_rejects_non_positive_denominator(self):
        with pytest.raises(ValueError):
            rational(1, 0)
        with pytest.raises(ValueError):
            rational(1, -2)


class TestFloorCeil:
    """Test floor and ceiling against their definitions."""

    def test_floor(self):
        assert floor_rat(rational(7, 2)) == 3
        assert floor_rat(rational(-7, 2)) == -4
        assert floor_rat(rational(12, 3)) == 4

    def test_ceil(self):
        assert ceil_rat(rational(10, 3)) == 4
        assert ceil_rat(rational(12, 3)) == 4
        assert ceil_rat(rational(-1, 2)) == 0

    @given(st.integers(min_value=-(10**12), max_value=10**12), st.integers(min_value=1, max_value=10**6))
    def test_floor_brackets_value(self, k, d):
        q = rational(k, d)
        f = floor_rat(q)
        assert f <= q < f + 1

    @given(st.integers(min_value=-(10**12), max_value=10**12), st.integers(min_value=1, max_value=10**6))
    def test_ceil_is_negated_floor_of_negation(self, k, d):
        assert ceil_rat(rational(k, d)) == -floor_rat(rational(-k, d))


class TestNearestInt:
    """Test nearest-integer rounding."""

    def test_examples(self):
        assert nearest_int(rational(10000, 48)) == 208
        assert nearest_int(rational(5, 1)) == 5
        assert nearest_int(rational(3, 4)) == 1

    def test_ties_round_away_from_zero(self):
        assert nearest_int(rational(7, 2)) == 4
        assert nearest_int(rational(-7, 2)) == -4
        assert nearest_int(rational(1, 2)) == 1
        assert nearest_int(rational(-1, 2)) == -1

    def test_negative_non_ties(self):
        assert nearest_int(rational(-7, 10)) == -1
        assert nearest_int(rational(-3, 10)) == 0
        assert nearest_int(rational(-5, 1)) == -5

    @given(st.integers(min_value=-(10**9), max_value=10**9), st.integers(min_value=1, max_value=10**4))
    def test_minimises_distance(self, k, d):
        q = rational(k, d)
        n = nearest_int(q)
        assert abs(n - q) <= Fraction(1, 2)
        assert abs(n - q) <= abs(n - 1 - q)
        assert abs(n - q) <= abs(n + 1 - q)

    def test_closed_form_inputs_never_tie(self):
        for p in range(1, 10_001):
            assert (2 * p * p) % 96 != 48
            assert (2 * (p + 3) ** 2) % 96 != 48
            assert not is_half_integer(rational(p * p, 48))
            assert not is_half_integer(rational((p + 3) ** 2, 48))


class TestDecompose:
    """Test Euclidean decomposition."""

    def test_examples(self):
        d = decompose(23, 12)
        assert (d.quotient, d.residue) == (1, 11)
        assert (decompose(12, 12).quotient, decompose(12, 12).residue) == (1, 0)
        assert (decompose(7, 3).quotient, decompose(7, 3).residue) == (2, 1)

    @given(st.integers(min_value=0, max_value=10**9), st.integers(min_value=1, max_value=1000))
    def test_reconstructs_input(self, p, m):
        d = decompose(p, m)
        assert d.modulus * d.quotient + d.residue == p
        assert 0 <= d.residue < m

    def test_invalid_arguments(self):
        with pytest.raises(ValueError):
            decompose(-1, 12)
        with pytest.raises(ValueError):
            decompose(5, 0)


class TestCheckRange:
    """Test the emulated signed width."""

    def test_within_range(self):
        assert check_range(2**127 - 1) == 2**127 - 1
        assert check_range(-(2**127)) == -(2**127)

    def test_outside_range(self):
        with pytest.raises(OverflowRangeError):
            check_range(2**127)
        with pytest.raises(OverflowRangeError):
            check_range(-(2**127) - 1)

    def test_custom_width(self):
        assert check_range(2**62, bits=64) == 2**62
        with pytest.raises(OverflowError):
            check_range(2**63, bits=64)
