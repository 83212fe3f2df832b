"""
Tests for the theorem suite
"""

import pytest
from hypothesis import given, settings

from semitop.errors import BadParams
from semitop.gallery.fixture_library import FIXED_SPACES
from semitop.gallery.random_generator import RandomSemitopologyGenerator, random_semitopology
from semitop.verification.theorem_suite import (
    THEOREMS,
    list_theorems,
    run_suite,
    run_theorem,
)
from tests.strategies import semitopologies


class TestTheoremSuite:
    """Test cases for running the suite."""

    @pytest.mark.parametrize("name", sorted(FIXED_SPACES))
    def test_passes_on_fixtures(self, build, name):
        report = run_suite(build(name))
        assert report.passed, [r.to_dict() for r in report.failures]

    def test_lists_every_theorem(self, build):
        report = run_suite(build('square'))
        assert [r.name for r in report.results] == list_theorems()
        assert 'partition' in THEOREMS

    def test_single_theorem(self, build):
        result = run_theorem(build('fig2_lower_left'), 'partition')
        assert result.passed and not result.skipped

    def test_unknown_theorem(self, build):
        with pytest.raises(BadParams, match="Unknown theorem"):
            run_theorem(build('square'), 'fermat')

    @pytest.mark.parametrize("theorem", [
        'find_regular_point',
        'regular_iff_minimal_closed_neighbourhood',
    ])
    def test_quasiregular_point_without_regular_point(self, build, theorem):
        result = run_theorem(build('quasiregular_without_regular'), theorem)
        assert result.passed, result.to_dict()

    def test_weakly_regular_point_with_minimal_intertwined_set(self):
        space = random_semitopology(7, 6, seed=1692732589)
        result = run_theorem(space, 'regular_iff_minimal_closed_neighbourhood')
        assert result.passed, result.to_dict()

    def test_truncated_family_skips(self, build, mocker):
        space = build('discrete', [5])
        mocker.patch.object(type(space), 'enumerate_opens',
                            lambda self, cap=None: self._enumerate(4))
        result = run_theorem(space, 'regular_iff_quasiregular_hypertransitive')
        assert result.skipped and result.passed

    def test_failing_check_reported(self, build, mocker):
        mocker.patch.dict(THEOREMS, {'partition': THEOREMS['partition'].__class__(
            'partition', 'forced failure', lambda space, rng: ['broken'])})
        report = run_suite(build('square'), ['partition'])
        assert not report.passed
        assert report.to_dict()['theorems'][0]['violations'] == ['broken']

    @given(semitopologies(max_points=5, max_generators=7))
    @settings(max_examples=40, deadline=None)
    def test_random_instances(self, space):
        assert run_suite(space).passed

    @pytest.mark.slow
    def test_thousand_seeded_instances(self):
        generator = RandomSemitopologyGenerator(seed=7, max_points=8, max_generators=10)
        for i, space in enumerate(generator.generate(1000)):
            report = run_suite(space, seed=i)
            assert report.passed, (space.name, [r.to_dict() for r in report.failures])
