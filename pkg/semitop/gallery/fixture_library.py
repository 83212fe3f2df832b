"""
Semitopology Fixture Library
Named example spaces and parametric families with pinned expectation tables
"""

import logging
import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Callable, Dict, List, Optional, Sequence

from semitop.errors import BadParams, UnknownFixture
from semitop.topology.classification import classify_all
from semitop.topology.relations import maximal_topen_partition
from semitop.topology.semitopology import SemiTopology

logger = logging.getLogger(__name__)


def _space(name: str, labels: Sequence[str], basis: Sequence[Sequence[str]]) -> SemiTopology:
    index = {label: i for i, label in enumerate(labels)}
    return SemiTopology.from_index_sets(
        len(labels),
        [[index[label] for label in g] for g in basis],
        labels=labels,
        name=name,
    )


def _numbered(n: int) -> List[str]:
    return [str(i) for i in range(n)]


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise BadParams(message)


# Parametric families

def build_discrete(n: int = 3) -> SemiTopology:
    _require(n >= 1, f"discrete needs n >= 1, got {n}")
    return _space(f"discrete({n})", _numbered(n), [[str(i)] for i in range(n)])


def build_trivial(n: int = 3) -> SemiTopology:
    _require(n >= 1, f"trivial needs n >= 1, got {n}")
    return _space(f"trivial({n})", _numbered(n), [])


def build_initial() -> SemiTopology:
    return _space("initial", [], [])


def build_supermajority(n: int = 4) -> SemiTopology:
    _require(1 <= n <= 16, f"supermajority needs 1 <= n <= 16, got {n}")
    threshold = math.ceil(2 * n / 3)
    labels = _numbered(n)
    return _space(f"supermajority({n})", labels,
                  [list(c) for c in combinations(labels, threshold)])


def build_all_but_one(n: int = 4) -> SemiTopology:
    _require(n >= 1, f"all_but_one needs n >= 1, got {n}")
    labels = _numbered(n)
    return _space(f"all_but_one({n})", labels,
                  [[x for x in labels if x != omitted] for omitted in labels])


def build_more_than_one(n: int = 4) -> SemiTopology:
    _require(2 <= n <= 32, f"more_than_one needs 2 <= n <= 32, got {n}")
    labels = _numbered(n)
    return _space(f"more_than_one({n})", labels, [list(c) for c in combinations(labels, 2)])


def build_grid_quorum(k: int = 3) -> SemiTopology:
    """k x k grid; each quorum is one full row together with one full column."""
    _require(1 <= k <= 8, f"grid_quorum needs 1 <= k <= 8, got {k}")
    labels = [f"{r}.{c}" for r in range(k) for c in range(k)]
    basis = [
        sorted({f"{row}.{c}" for c in range(k)} | {f"{r}.{col}" for r in range(k)})
        for row in range(k) for col in range(k)
    ]
    return _space(f"grid_quorum({k})", labels, basis)


def build_two_triples_line(m: int = 3) -> SemiTopology:
    """Points 0..2m with coalitions {2i, 2i+1, 2i+2}."""
    _require(m >= 1, f"two_triples_line needs m >= 1, got {m}")
    return _space(f"two_triples_line({m})", _numbered(2 * m + 1),
                  [[str(2 * i), str(2 * i + 1), str(2 * i + 2)] for i in range(m)])


def build_final_segment_block(n: int = 12) -> SemiTopology:
    """Final segments of 0..n-1 plus the block {0..9}."""
    _require(n >= 12, f"final_segment_block needs n >= 12, got {n}")
    labels = _numbered(n)
    basis = [labels[start:] for start in range(n)] + [labels[:10]]
    return _space(f"final_segment_block({n})", labels, basis)


# Fixed example spaces

FIXED_SPACES: Dict[str, Dict[str, Any]] = {
    'two_min': {
        'labels': ['0', '1', '2'],
        'basis': [['0', '1'], ['1', '2']],
        'description': 'Point 1 has two distinct minimal open neighbourhoods',
    },
    'nbhd_triangle': {
        'labels': ['0', '1', '2'],
        'basis': [['0', '1'], ['1', '2'], ['0', '2']],
        'description': '{0,1} and {0,2} are neighbourhoods of 0 but {0} is not open',
    },
    'fig2_top_left': {
        'labels': ['0', '1', '2'],
        'basis': [['0'], ['2']],
        'description': 'Two maximal topens {0} and {2}; 1 weakly regular and conflicted',
    },
    'fig2_top_right': {
        'labels': ['0', '1', '2'],
        'basis': [['0'], ['2'], ['0', '1'], ['1', '2']],
        'description': 'Two maximal topens {0} and {2}; 1 has empty community',
    },
    'fig2_lower_left': {
        'labels': ['0', '1', '2', '3', '4'],
        'basis': [['0', '1'], ['1'], ['3'], ['3', '4']],
        'description': 'Two maximal topens {0,1} and {3,4}; 2 intertwined with everything',
    },
    'fig2_lower_right': {
        'labels': ['0', '1', '2', '*'],
        'basis': [['0'], ['1'], ['2'], ['0', '1', '*'], ['1', '2', '*']],
        'description': 'Three maximal topens; * quasiregular but not hypertransitive',
    },
    'not_strong_topen': {
        'labels': ['0', '1', '2'],
        'basis': [['0', '2'], ['1', '2'], ['0', '1']],
        'description': '{0,1} is topen but not a strong topen',
    },
    'not_strongly_transitive': {
        'labels': ['0', '1', '2'],
        'basis': [['1'], ['0', '1'], ['1', '2']],
        'description': 'A topology where {0,2} is transitive but not strongly transitive',
    },
    'square': {
        'labels': ['0', '1', '2', '3'],
        'basis': [['3', '0'], ['0', '1'], ['1', '2'], ['2', '3']],
        'description': 'Four clopen edges A, B, C, D; no topens and every community empty',
    },
    'fig_irregular_left': {
        'labels': ['0', '1', '2', '3', '4'],
        'basis': [['1', '2'], ['0', '1', '3'], ['0', '2', '4'], ['3'], ['4']],
        'description': 'Community of 0 is topen but does not contain 0',
    },
    'fig_irregular_right': {
        'labels': ['0', '1', '2', '3', '4'],
        'basis': [['1'], ['2'], ['3'], ['4'], ['0', '1', '2', '3'], ['0', '1', '2', '4']],
        'description': '*0 contains two minimal closed neighbourhoods {0,1} and {0,2}',
    },
    'sierpinski': {
        'labels': ['0', '1'],
        'basis': [['1']],
        'description': 'closure(0) = {0} is strictly inside *0 = {0,1}',
    },
    'fig_boundaries_left': {
        'labels': ['0', '1', '2', '*'],
        'basis': [['0'], ['1'], ['2'], ['0', '1', '*'], ['1', '2', '*']],
        'description': '* lies on the boundary of *1, is unconflicted and not weakly regular',
    },
    'fig_boundaries_mid': {
        'labels': ['0', '1', '2'],
        'basis': [['0'], ['2']],
        'description': '1 lies on the boundary of *0, is conflicted and weakly regular',
    },
    'fig_boundaries_right': {
        'labels': ['1', '2', '3', 'a', 'b', 'c', 'd'],
        'basis': [['1', 'a', 'c'], ['3', 'b', 'd'], ['2', 'a', 'b'], ['2', 'c', 'd'],
                  ['a'], ['b'], ['c'], ['d']],
        'description': '1, 2 and 3 are conflicted; 2 has an empty community and 1, 3 are weakly regular',
    },
    'ast12': {
        'labels': ['*', '1', '2'],
        'basis': [['1'], ['2'], ['*', '2']],
        'description': 'Regular boundary point * of closed neighbourhood {1,*}, not intertwined with its interior',
    },
    'ast12b': {
        'labels': ['*', '1', '2', '3'],
        'basis': [['1'], ['2'], ['3'], ['*', '2']],
        'description': 'Regular unconflicted * in the kissing set of closed neighbourhoods {*,1} and {*,3}',
    },
    'quasiregular_without_regular': {
        'labels': ['0', '1', '2', '3', '4'],
        'basis': [['1', '2'], ['1', '4'], ['3', '4'], ['0', '2', '3'], ['0', '1', '2', '4']],
        'description': '0 is quasiregular with K(0) = {0,2,3} yet no point is regular',
    },
}


PARAMETRIC_BUILDERS: Dict[str, Callable[..., SemiTopology]] = {
    'discrete': build_discrete,
    'trivial': build_trivial,
    'initial': build_initial,
    'supermajority': build_supermajority,
    'all_but_one': build_all_but_one,
    'more_than_one': build_more_than_one,
    'grid_quorum': build_grid_quorum,
    'two_triples_line': build_two_triples_line,
    'final_segment_block': build_final_segment_block,
}


# Pinned classification tables, keyed by fixture name. Point sets are label lists.
EXPECTATIONS: Dict[str, Dict[str, Any]] = {
    'two_min': {
        'intertwined': {'0': ['0', '1', '2'], '1': ['0', '1', '2'], '2': ['0', '1', '2']},
        'community': {'0': ['0', '1', '2'], '1': ['0', '1', '2'], '2': ['0', '1', '2']},
        'regular': ['0', '1', '2'],
        'weakly_regular': ['0', '1', '2'],
        'quasiregular': ['0', '1', '2'],
        'conflicted': [],
        'hypertransitive': ['0', '1', '2'],
        'partition': {'topens': [['0', '1', '2']], 'residue': []},
    },
    'fig2_top_left': {
        'intertwined': {'0': ['0', '1'], '1': ['0', '1', '2'], '2': ['1', '2']},
        'community': {'0': ['0'], '1': ['0', '1', '2'], '2': ['2']},
        'regular': ['0', '2'],
        'weakly_regular': ['0', '1', '2'],
        'quasiregular': ['0', '1', '2'],
        'conflicted': ['1'],
        'hypertransitive': ['0', '2'],
        'partition': {'topens': [['0'], ['2']], 'residue': ['1']},
    },
    'fig2_top_right': {
        'intertwined': {'0': ['0'], '1': ['1'], '2': ['2']},
        'community': {'0': ['0'], '1': [], '2': ['2']},
        'regular': ['0', '2'],
        'weakly_regular': ['0', '2'],
        'quasiregular': ['0', '2'],
        'conflicted': [],
        'hypertransitive': ['0', '1', '2'],
        'partition': {'topens': [['0'], ['2']], 'residue': ['1']},
    },
    'fig2_lower_left': {
        'intertwined': {
            '0': ['0', '1', '2'], '1': ['0', '1', '2'], '2': ['0', '1', '2', '3', '4'],
            '3': ['2', '3', '4'], '4': ['2', '3', '4'],
        },
        'community': {
            '0': ['0', '1'], '1': ['0', '1'], '2': ['0', '1', '2', '3', '4'],
            '3': ['3', '4'], '4': ['3', '4'],
        },
        'regular': ['0', '1', '3', '4'],
        'weakly_regular': ['0', '1', '2', '3', '4'],
        'quasiregular': ['0', '1', '2', '3', '4'],
        'conflicted': ['2'],
        'hypertransitive': ['0', '1', '3', '4'],
        'partition': {'topens': [['0', '1'], ['3', '4']], 'residue': ['2']},
    },
    'fig2_lower_right': {
        'intertwined': {'0': ['0'], '1': ['1', '*'], '2': ['2'], '*': ['1', '*']},
        'community': {'0': ['0'], '1': ['1'], '2': ['2'], '*': ['1']},
        'regular': ['0', '1', '2'],
        'weakly_regular': ['0', '1', '2'],
        'quasiregular': ['0', '1', '2', '*'],
        'conflicted': [],
        'hypertransitive': ['0', '1', '2'],
        'partition': {'topens': [['0'], ['1'], ['2']], 'residue': ['*']},
    },
    'not_strong_topen': {
        'intertwined': {'0': ['0', '1', '2'], '1': ['0', '1', '2'], '2': ['0', '1', '2']},
        'community': {'0': ['0', '1', '2'], '1': ['0', '1', '2'], '2': ['0', '1', '2']},
        'regular': ['0', '1', '2'],
        'weakly_regular': ['0', '1', '2'],
        'quasiregular': ['0', '1', '2'],
        'conflicted': [],
        'hypertransitive': ['0', '1', '2'],
        'partition': {'topens': [['0', '1', '2']], 'residue': []},
    },
    'not_strongly_transitive': {
        'intertwined': {'0': ['0', '1', '2'], '1': ['0', '1', '2'], '2': ['0', '1', '2']},
        'community': {'0': ['0', '1', '2'], '1': ['0', '1', '2'], '2': ['0', '1', '2']},
        'regular': ['0', '1', '2'],
        'weakly_regular': ['0', '1', '2'],
        'quasiregular': ['0', '1', '2'],
        'conflicted': [],
        'hypertransitive': ['0', '1', '2'],
        'partition': {'topens': [['0', '1', '2']], 'residue': []},
    },
    'square': {
        'intertwined': {'0': ['0'], '1': ['1'], '2': ['2'], '3': ['3']},
        'community': {'0': [], '1': [], '2': [], '3': []},
        'regular': [],
        'weakly_regular': [],
        'quasiregular': [],
        'conflicted': [],
        'hypertransitive': ['0', '1', '2', '3'],
        'partition': {'topens': [], 'residue': ['0', '1', '2', '3']},
    },
    'fig_irregular_left': {
        'intertwined': {
            '0': ['0', '1', '2'], '1': ['0', '1', '2'], '2': ['0', '1', '2'],
            '3': ['3'], '4': ['4'],
        },
        'community': {
            '0': ['1', '2'], '1': ['1', '2'], '2': ['1', '2'], '3': ['3'], '4': ['4'],
        },
        'regular': ['1', '2', '3', '4'],
        'weakly_regular': ['1', '2', '3', '4'],
        'quasiregular': ['0', '1', '2', '3', '4'],
        'conflicted': [],
        'hypertransitive': ['1', '2', '3', '4'],
        'partition': {'topens': [['3'], ['4'], ['1', '2']], 'residue': ['0']},
    },
    'fig_irregular_right': {
        'intertwined': {
            '0': ['0', '1', '2'], '1': ['0', '1'], '2': ['0', '2'], '3': ['3'], '4': ['4'],
        },
        'community': {'0': ['1', '2'], '1': ['1'], '2': ['2'], '3': ['3'], '4': ['4']},
        'regular': ['1', '2', '3', '4'],
        'weakly_regular': ['1', '2', '3', '4'],
        'quasiregular': ['0', '1', '2', '3', '4'],
        'conflicted': ['0'],
        'hypertransitive': ['1', '2', '3', '4'],
        'partition': {'topens': [['1'], ['2'], ['3'], ['4']], 'residue': ['0']},
        'minimal_closed_neighbourhoods': [['3'], ['4'], ['0', '1'], ['0', '2']],
    },
    'sierpinski': {
        'intertwined': {'0': ['0', '1'], '1': ['0', '1']},
        'community': {'0': ['0', '1'], '1': ['0', '1']},
        'regular': ['0', '1'],
        'weakly_regular': ['0', '1'],
        'quasiregular': ['0', '1'],
        'conflicted': [],
        'hypertransitive': ['0', '1'],
        'partition': {'topens': [['0', '1']], 'residue': []},
    },
    'fig_boundaries_right': {
        'intertwined': {
            '1': ['1', '2', 'a', 'c'], '2': ['1', '2', '3'], '3': ['2', '3', 'b', 'd'],
        },
        'community': {'1': ['1', 'a', 'c'], '2': [], '3': ['3', 'b', 'd']},
        'conflicted': ['1', '2', '3'],
    },
    'ast12': {
        'intertwined': {'*': ['*', '2'], '1': ['1'], '2': ['*', '2']},
        'community': {'*': ['*', '2'], '1': ['1'], '2': ['*', '2']},
        'regular': ['*', '1', '2'],
        'weakly_regular': ['*', '1', '2'],
        'quasiregular': ['*', '1', '2'],
        'conflicted': [],
        'hypertransitive': ['*', '1', '2'],
        'partition': {'topens': [['1'], ['*', '2']], 'residue': []},
    },
    'ast12b': {
        'intertwined': {'*': ['*', '2'], '1': ['1'], '2': ['*', '2'], '3': ['3']},
        'community': {'*': ['*', '2'], '1': ['1'], '2': ['*', '2'], '3': ['3']},
        'regular': ['*', '1', '2', '3'],
        'weakly_regular': ['*', '1', '2', '3'],
        'quasiregular': ['*', '1', '2', '3'],
        'conflicted': [],
        'hypertransitive': ['*', '1', '2', '3'],
        'partition': {'topens': [['1'], ['3'], ['*', '2']], 'residue': []},
    },
    'quasiregular_without_regular': {
        'intertwined': {
            '0': ['0', '2', '3'], '1': ['1'], '2': ['0', '2'], '3': ['0', '3'], '4': ['4'],
        },
        'community': {'0': ['0', '2', '3'], '1': [], '2': [], '3': [], '4': []},
        'regular': [],
        'weakly_regular': ['0'],
        'quasiregular': ['0'],
        'conflicted': ['0'],
        'partition': {'topens': [], 'residue': ['0', '1', '2', '3', '4']},
        'minimal_closed_neighbourhoods': [
            ['1', '4'], ['0', '1', '2'], ['0', '2', '3'], ['0', '3', '4'],
        ],
    },
}

# Same spaces under a second name share their tables
EXPECTATIONS['nbhd_triangle'] = EXPECTATIONS['not_strong_topen']
EXPECTATIONS['fig_boundaries_left'] = EXPECTATIONS['fig2_lower_right']
EXPECTATIONS['fig_boundaries_mid'] = EXPECTATIONS['fig2_top_left']


@dataclass(frozen=True)
class FixtureEntry:
    """A named fixture: how to build it and what it must classify to."""
    name: str
    builder: Callable[..., SemiTopology]
    parametric: bool = False
    description: str = ""
    expected: Optional[Dict[str, Any]] = field(default=None, hash=False, compare=False)


class FixtureLibrary:
    """
    Registry of every named example space.

    Fixed spaces come from ``FIXED_SPACES``; parametric families take integer
    parameters. Pinned expectations are checked by :meth:`verify`.
    """

    def __init__(self) -> None:
        self._entries: Dict[str, FixtureEntry] = {}
        for name, config in FIXED_SPACES.items():
            self._entries[name] = FixtureEntry(
                name=name,
                builder=self._fixed_builder(name, config),
                description=config['description'],
                expected=EXPECTATIONS.get(name),
            )
        for name, builder in PARAMETRIC_BUILDERS.items():
            self._entries[name] = FixtureEntry(
                name=name,
                builder=builder,
                parametric=True,
                description=(builder.__doc__ or name).strip().splitlines()[0],
            )

    @staticmethod
    def _fixed_builder(name: str, config: Dict[str, Any]) -> Callable[[], SemiTopology]:
        def build() -> SemiTopology:
            return _space(name, config['labels'], config['basis'])
        return build

    def list_fixtures(self) -> List[str]:
        return sorted(self._entries)

    def list_pinned(self) -> List[str]:
        return sorted(name for name, e in self._entries.items() if e.expected)

    def get_entry(self, name: str) -> FixtureEntry:
        try:
            return self._entries[name]
        except KeyError:
            raise UnknownFixture(
                f"Unknown fixture: '{name}'. Available fixtures: {', '.join(self.list_fixtures())}"
            ) from None

    def build(self, name: str, params: Sequence[int] = ()) -> SemiTopology:
        """
        Build a fixture by name.

        Raises:
            UnknownFixture: if no fixture has this name
            BadParams: if parameters are invalid for the family
        """
        entry = self.get_entry(name)
        if params and not entry.parametric:
            raise BadParams(f"Fixture '{name}' takes no parameters, got {list(params)}")
        try:
            space = entry.builder(*params)
        except TypeError as e:
            raise BadParams(f"Bad parameters for '{name}': {e}") from e
        logger.info(f"Built fixture {space.name} with {space.n} points "
                    f"and {len(space.basis)} generators")
        return space

    def verify(self, name: str) -> List[str]:
        """
        Compare a fixture's computed classification with its pinned table.

        Returns:
            Human-readable mismatch descriptions; empty when everything matches
        """
        entry = self.get_entry(name)
        if not entry.expected:
            return []
        space = entry.builder()
        table = classify_all(space)
        expected = entry.expected
        mismatches: List[str] = []

        def compare(what: str, got: Any, want: Any) -> None:
            if got != want:
                mismatches.append(f"{name}: {what} expected {want}, got {got}")

        for key, column in (('intertwined', 'intertwined'), ('community', 'community')):
            for label, want in expected.get(key, {}).items():
                row = table[space.index_of(label)]
                compare(f"{key}({label})", space.labels_of(getattr(row, column)),
                        space.labels_of(space.set_of(want)))

        for flag in ('regular', 'weakly_regular', 'quasiregular', 'conflicted', 'hypertransitive'):
            if flag in expected:
                got = [space.labels[p] for p in table.points_where(flag)]
                compare(flag, sorted(got), sorted(expected[flag]))

        if 'partition' in expected:
            compare('partition', maximal_topen_partition(space).to_dict(space),
                    {'topens': expected['partition']['topens'],
                     'residue': expected['partition']['residue']})

        if 'minimal_closed_neighbourhoods' in expected:
            from semitop.topology.classification import minimal_closed_neighbourhoods
            compare('minimal_closed_neighbourhoods',
                    [space.labels_of(c) for c in minimal_closed_neighbourhoods(space)],
                    expected['minimal_closed_neighbourhoods'])

        for line in mismatches:
            logger.error(line)
        return mismatches
