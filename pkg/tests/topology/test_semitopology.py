"""
Tests for the SemiTopology core
"""

import pytest
from hypothesis import given, settings

from semitop.errors import BadParams, FamilyTruncated
from semitop.topology.pointset import PointSet
from semitop.topology.semitopology import SemiTopology
from tests.strategies import semitopologies, spaces_with_set


def labelled(space, sets):
    return [space.labels_of(s) for s in sets]


class TestConstruction:
    """Test cases for building spaces."""

    def test_empty_and_duplicate_generators_dropped(self):
        space = SemiTopology.from_index_sets(3, [[0], [], [0], [2, 1]])
        assert labelled(space, space.basis) == [['0'], ['1', '2']]

    def test_duplicate_labels_rejected(self):
        with pytest.raises(BadParams, match="unique"):
            SemiTopology.from_index_sets(2, [], labels=['a', 'a'])

    def test_label_count_must_match(self):
        with pytest.raises(BadParams, match="Expected 3 labels"):
            SemiTopology.from_index_sets(3, [], labels=['a'])

    def test_out_of_range_generator_rejected(self):
        with pytest.raises(BadParams):
            SemiTopology.from_index_sets(2, [[0, 5]])

    def test_unknown_label(self, build):
        space = build('fig2_top_left')
        with pytest.raises(BadParams, match="Unknown point label: 'zz'"):
            space.index_of('zz')

    def test_spaces_are_hashable_values(self):
        a = SemiTopology.from_index_sets(3, [[0], [2]])
        b = SemiTopology.from_index_sets(3, [[2], [0], [0]])
        assert a == b and hash(a) == hash(b)


class TestOpenClosedAlgebra:
    """Test cases for open/closed set operations."""

    @pytest.fixture
    def top_left(self, build):
        return build('fig2_top_left')

    def test_is_open(self, top_left):
        assert top_left.is_open(top_left.set_of(['0', '2']))
        assert not top_left.is_open(top_left.set_of(['0', '1']))
        assert top_left.is_open(top_left.empty)

    def test_interior(self, top_left, build):
        assert top_left.interior(top_left.full) == top_left.full
        assert top_left.labels_of(top_left.interior(top_left.set_of(['0', '1']))) == ['0']
        square = build('square')
        assert square.interior(square.set_of(['0'])).is_empty()

    def test_closure(self, build):
        sierpinski = build('sierpinski')
        assert sierpinski.labels_of(sierpinski.closure(sierpinski.set_of(['0']))) == ['0']
        assert sierpinski.closure(sierpinski.set_of(['1'])) == sierpinski.full
        assert sierpinski.closure(sierpinski.empty).is_empty()

    def test_is_closed(self, top_left, build):
        sierpinski = build('sierpinski')
        assert sierpinski.is_closed(sierpinski.set_of(['0']))
        assert top_left.is_closed(top_left.set_of(['0', '1']))
        assert top_left.is_closed(top_left.full)
        assert top_left.is_closed_by_complement(top_left.set_of(['0', '1']))

    def test_complement(self, top_left):
        assert top_left.labels_of(top_left.complement(top_left.set_of(['0']))) == ['1', '2']
        assert top_left.complement(top_left.empty) == top_left.full

    def test_clopen_edges_of_square(self, build):
        square = build('square')
        assert square.is_clopen(square.set_of(['3', '0']))
        assert not square.is_clopen(square.set_of(['0', '1', '3']))

    @given(spaces_with_set())
    def test_complement_is_involution(self, case):
        space, s = case
        assert space.complement(space.complement(s)) == s

    @given(spaces_with_set())
    def test_closedness_characterisations_agree(self, case):
        space, s = case
        assert space.is_closed(s) == space.is_closed_by_complement(s)


class TestEnumeration:
    """Test cases for open family enumeration."""

    def test_top_left_family(self, build):
        space = build('fig2_top_left')
        family = space.enumerate_opens()
        assert labelled(space, family) == [[], ['0'], ['2'], ['0', '2'], ['0', '1', '2']]
        assert not family.truncated

    def test_trivial_and_discrete(self, build):
        assert len(build('trivial', [3]).enumerate_opens()) == 2
        assert len(build('discrete', [2]).enumerate_opens()) == 4

    def test_cap_truncates(self, build):
        family = build('discrete', [5]).enumerate_opens(cap=10)
        assert family.truncated
        assert len(family) == 10
        with pytest.raises(FamilyTruncated, match="truncated after 10"):
            family.require_exact()

    def test_cap_must_be_positive(self, build):
        with pytest.raises(BadParams):
            build('discrete', [2]).enumerate_opens(cap=0)

    def test_closed_sets_are_complements(self, build):
        space = build('sierpinski')
        assert labelled(space, space.closed_sets()) == [[], ['0'], ['0', '1']]

    def test_is_topology(self, build):
        assert build('not_strongly_transitive').is_topology()
        assert not build('two_min').is_topology()

    @given(semitopologies(max_points=5, max_generators=6))
    @settings(max_examples=50)
    def test_family_closed_under_union(self, space):
        family = space.enumerate_opens()
        members = set(family)
        assert space.empty in members and space.full in members
        assert all((a | b) in members for a in family for b in family)
        assert all(space.is_open(o) for o in family)


class TestNeighbourhoods:
    """Test cases for open neighbourhoods."""

    def test_two_minimal_open_neighbourhoods(self, build):
        space = build('two_min')
        minimal = space.minimal_open_neighbourhoods(space.index_of('1'))
        assert labelled(space, minimal) == [['0', '1'], ['1', '2']]

    def test_neighbourhood_triangle(self, build):
        space = build('nbhd_triangle')
        nbhds = space.open_neighbourhoods(space.index_of('0'))
        assert space.set_of(['0', '1']) in nbhds
        assert space.set_of(['0', '2']) in nbhds
        assert space.set_of(['0']) not in nbhds

    def test_generators_include_whole_space(self, build):
        space = build('trivial', [3])
        assert space.generators_at(0) == (space.full,)


class TestSubspace:
    """Test cases for induced subspaces."""

    def test_subspace_of_not_strong_topen(self, build):
        space = build('not_strong_topen')
        sub = space.subspace(space.set_of(['0', '1']))
        opens = labelled(sub, sub.enumerate_opens())
        assert ['0'] in opens and ['1'] in opens

    def test_subspace_on_whole_space(self, build):
        space = build('fig2_lower_left')
        sub = space.subspace(space.full)
        assert labelled(sub, sub.enumerate_opens()) == labelled(space, space.enumerate_opens())

    def test_subspace_on_empty_set_is_initial(self, build):
        space = build('fig2_lower_left')
        sub = space.subspace(space.empty)
        assert sub.n == 0
        assert len(sub.enumerate_opens()) == 1

    def test_lift_from_subspace(self, build):
        space = build('fig2_lower_left')
        t = space.set_of(['1', '3', '4'])
        sub = space.subspace(t)
        lifted = space.lift_from_subspace(t, sub.set_of(['3', '4']))
        assert space.labels_of(lifted) == ['3', '4']
