"""
Tests for PointSet
"""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from semitop.topology.pointset import (
    PointSet, canonical_sorted, maximal_elements, minimal_elements
)


class TestPointSet:
    """Test cases for the bitmask set type."""

    def test_of_and_iteration(self):
        s = PointSet.of(5, [3, 0, 3])
        assert s.bits == 0b1001
        assert list(s) == [0, 3]
        assert len(s) == 2
        assert 3 in s and 1 not in s

    def test_out_of_range_index_rejected(self):
        with pytest.raises(ValueError, match="outside"):
            PointSet.of(3, [3])

    def test_bits_beyond_universe_rejected(self):
        with pytest.raises(ValueError, match="exceed universe"):
            PointSet(0b1000, 3)

    def test_mixed_universes_rejected(self):
        with pytest.raises(ValueError):
            PointSet.full(3) | PointSet.full(4)

    def test_complement_stays_in_universe(self):
        s = PointSet.of(4, [1])
        assert list(~s) == [0, 2, 3]
        assert (~PointSet.empty(4)).is_full()

    def test_order_is_subset_order(self):
        a, b = PointSet.of(4, [1]), PointSet.of(4, [1, 2])
        assert a <= b and a < b and b >= a and b > a
        assert not b <= a
        assert not PointSet.of(4, [0]) <= PointSet.of(4, [1])

    def test_meets(self):
        assert PointSet.of(4, [0, 1]).meets(PointSet.of(4, [1, 2]))
        assert not PointSet.of(4, [0]).meets(PointSet.of(4, [1]))
        assert not PointSet.empty(4).meets(PointSet.empty(4))

    def test_canonical_order(self):
        sets = [PointSet.of(4, [0, 3]), PointSet.of(4, [2]), PointSet.of(4, [0, 1]),
                PointSet.of(4, [2])]
        assert [s.indices() for s in canonical_sorted(sets)] == [[2], [0, 1], [0, 3]]

    def test_minimal_and_maximal_elements(self):
        sets = [PointSet.of(4, [0, 1]), PointSet.of(4, [0]), PointSet.of(4, [2, 3]),
                PointSet.of(4, [0, 1, 2, 3])]
        assert [s.indices() for s in minimal_elements(sets)] == [[0], [2, 3]]
        assert [s.indices() for s in maximal_elements(sets)] == [[0, 1, 2, 3]]

    @given(st.integers(min_value=0, max_value=255), st.integers(min_value=0, max_value=255))
    def test_de_morgan(self, a_bits, b_bits):
        a, b = PointSet(a_bits, 8), PointSet(b_bits, 8)
        assert ~(a | b) == ~a & ~b
        assert ~(a & b) == ~a | ~b
        assert a - b == a & ~b
