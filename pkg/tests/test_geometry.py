"""
Tests for Heron areas and the maximum-area triangle.
"""

from decimal import Decimal
from fractions import Fraction

import pytest

from alcuin.core.triple import TriangleTriple, make_triple
from alcuin.counting.enumeration import enumerate_triples
from alcuin.errors import HypothesisViolated, NoTriangle, NotATriangle, OverflowRangeError
from alcuin.geometry.heron import (
    area_argmax_bruteforce,
    area_decimal,
    first_argmax_failure,
    fixed_base_pairs,
    heron_16esq,
    max_area_432,
    max_area_triple,
    range_lemma_holds,
    range_lemma_sweep,
    range_minimizer,
    range_of,
    residue_representative,
)


class TestHeron:
    """Test 16E^2."""

    def test_examples(self):
        assert heron_16esq(make_triple(3, 4, 5)) == 576
        assert heron_16esq(make_triple(1, 1, 1)) == 3
        assert heron_16esq(make_triple(2, 2, 3)) == 63

    def test_strictly_positive(self):
        for p in range(3, 60):
            assert all(heron_16esq(t) > 0 for t in enumerate_triples(p))

    def test_equilateral(self):
        for n in range(1, 200):
            assert heron_16esq(TriangleTriple(n, n, n)) == 3 * n**4

    def test_overflow(self):
        side = 2**40
        with pytest.raises(OverflowRangeError):
            heron_16esq(TriangleTriple(side, side, side))


class TestRange:
    """Test the range of a triple."""

    def test_examples(self):
        assert range_of(make_triple(5, 5, 5)) == 0
        assert range_of(make_triple(2, 2, 3)) == 1
        assert range_of(make_triple(2, 4, 4)) == 2


class TestMaxAreaTriple:
    """Test the closed-form construction."""

    def test_multiple_of_three(self):
        result = max_area_triple(3)
        assert result.triple == TriangleTriple(1, 1, 1)
        assert result.v == 0
        assert result.area_sq_432 == 81

    def test_one_mod_three(self):
        result = max_area_triple(7)
        assert result.triple == TriangleTriple(2, 2, 3)
        assert result.v == 1
        assert result.area_sq_432 == 1701 == 27 * heron_16esq(result.triple)

    def test_two_mod_three(self):
        result = max_area_triple(8)
        assert result.triple == TriangleTriple(2, 3, 3)
        assert result.v == -1
        assert result.area_sq_432 == 3456 == 27 * 128

    @pytest.mark.parametrize("p", [1, 2, 4])
    def test_no_triangle(self, p):
        with pytest.raises(NoTriangle, match="no triangle exists"):
            max_area_triple(p)

    def test_degenerate_candidate_is_reported(self):
        with pytest.raises(NoTriangle) as excinfo:
            max_area_triple(4)
        assert "(1, 1, 2) is degenerate; formula gives 432E^2 = 0" in str(excinfo.value)
        assert max_area_432(4) == 0
        assert isinstance(excinfo.value.__cause__, NotATriangle)

    @pytest.mark.parametrize("p, sides", [(1, "(0, 0, 1)"), (2, "(0, 1, 1)")])
    def test_zero_side_candidate_has_no_area_value(self, p, sides):
        with pytest.raises(NoTriangle) as excinfo:
            max_area_triple(p)
        message = str(excinfo.value)
        assert f"candidate {sides} has a zero side" in message
        assert "432E^2" not in message

    def test_invalid_perimeter(self):
        with pytest.raises(ValueError):
            max_area_triple(0)

    def test_exact_area(self):
        result = max_area_triple(3)
        assert result.area_squared == Fraction(3, 16)
        assert result.p == 3

    def test_residue_representative(self):
        assert [residue_representative(p) for p in range(3, 9)] == [0, 1, -1, 0, 1, -1]

    def test_equilateral_formula(self):
        # p = 3n: E = p^2 sqrt(3) / 36, so 432 E^2 = p^4
        for n in range(1, 100):
            assert max_area_triple(3 * n).area_sq_432 == (3 * n) ** 4


class TestAreaDecimal:
    """Test the display rendering of E."""

    def test_examples(self):
        assert area_decimal(81) == Decimal("0.433013")
        assert area_decimal(3456) == Decimal("2.828427")
        assert area_decimal(432) == Decimal("1.000000")

    def test_places(self):
        assert area_decimal(3456, places=2) == Decimal("2.83")
        assert area_decimal(3456, places=0) == Decimal("3")

    def test_negative(self):
        with pytest.raises(ValueError):
            area_decimal(-1)

    def test_result_method(self):
        assert max_area_triple(8).area_approx() == Decimal("2.828427")


class TestBruteForceArgmax:
    """Test the scan over all triangles."""

    def test_examples(self):
        assert area_argmax_bruteforce(12) == TriangleTriple(4, 4, 4)
        assert area_argmax_bruteforce(10) == TriangleTriple(3, 3, 4)

    def test_no_triangle(self):
        with pytest.raises(NoTriangle):
            area_argmax_bruteforce(2)
        with pytest.raises(NoTriangle):
            area_argmax_bruteforce(4)

    def test_grid_lists_every_triangle(self):
        from alcuin.geometry.heron import _triangle_grid

        for p in range(1, 90):
            a, b, c = _triangle_grid(p)
            rows = [tuple(int(v) for v in row) for row in zip(a, b, c)]
            assert rows == [t.as_tuple() for t in enumerate_triples(p)]

    def test_grid_and_exact_paths_agree(self, monkeypatch):
        from alcuin.geometry import heron

        grid = [area_argmax_bruteforce(p) for p in range(5, 80)]
        monkeypatch.setattr(heron, "_NUMPY_PERIMETER_LIMIT", 0)
        exact = [heron.area_argmax_bruteforce(p) for p in range(5, 80)]
        assert grid == exact

    def test_matches_closed_form(self):
        for p in range(3, 400):
            if p == 4:
                continue
            result = max_area_triple(p)
            assert area_argmax_bruteforce(p) == result.triple
            assert 27 * heron_16esq(result.triple) == result.area_sq_432
            assert range_minimizer(p) == result.triple

    def test_argmax_is_unique(self):
        for p in range(5, 120):
            areas = sorted((heron_16esq(t) for t in enumerate_triples(p)), reverse=True)
            if len(areas) > 1:
                assert areas[0] > areas[1]

    @pytest.mark.slow
    def test_sweep_to_two_thousand(self):
        assert first_argmax_failure(2000) is None

    def test_sweep_small(self):
        assert first_argmax_failure(150) is None


class TestRangeLemma:
    """Test the fixed-base lemma: smaller range, larger area."""

    def test_holds_for_shared_middle_side(self):
        assert range_lemma_holds(make_triple(3, 4, 5), make_triple(4, 4, 4))
        assert range_lemma_holds(make_triple(3, 5, 7), make_triple(4, 5, 6))
        assert range_lemma_holds(make_triple(5, 5, 5), make_triple(3, 5, 7))
        assert range_lemma_holds(make_triple(4, 5, 6), make_triple(4, 5, 6))

    def test_middle_sides_differ(self):
        with pytest.raises(HypothesisViolated):
            range_lemma_holds(make_triple(1, 3, 3), make_triple(2, 3, 2))
        with pytest.raises(HypothesisViolated):
            range_lemma_holds(make_triple(2, 4, 4), make_triple(3, 4, 3))

    def test_perimeters_differ(self):
        with pytest.raises(HypothesisViolated):
            range_lemma_holds(make_triple(3, 4, 5), make_triple(3, 4, 4))

    def test_invalid_triple_rejected_upstream(self):
        with pytest.raises(NotATriangle):
            make_triple(1, 5, 6)

    def test_fixed_base_pairs(self):
        assert fixed_base_pairs(12, 4) == [(3, 4, 5), (4, 4, 4)]
        assert fixed_base_pairs(4, 2) == []
        for x, m, y in fixed_base_pairs(40, 9):
            make_triple(x, m, y)

    def test_fixed_base_pairs_base_need_not_be_middle(self):
        assert (4, 6, 10) not in fixed_base_pairs(20, 6)
        assert (7, 6, 7) in fixed_base_pairs(20, 6)

    def test_sweep(self):
        assert range_lemma_sweep(300) is None
