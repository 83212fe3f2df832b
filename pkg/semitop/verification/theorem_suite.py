"""
Theorem Suite
Structural laws every semitopology must satisfy, checked on a concrete space
"""

import logging
import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Dict, List, Optional, Sequence

from semitop.consensus.value_assignment import (
    build_splitting_assignment,
    disagreeing_intertwined_pairs,
    find_split,
    is_continuous,
    preimages_closed,
    preimages_open,
    propagate,
    random_assignment,
)
from semitop.errors import BadParams, FamilyTruncated
from semitop.topology.classification import (
    closed_neighbourhoods_of,
    community,
    find_regular_point,
    is_hypertransitive,
    is_quasiregular,
    is_quasiregular_space,
    is_regular,
    is_unconflicted,
    is_weakly_regular,
    minimal_closed_neighbourhoods,
    regular_closeds,
    regular_opens,
)
from semitop.topology.pointset import PointSet, minimal_elements
from semitop.topology.relations import (
    intertwined_of,
    intertwined_space_conditions,
    is_topen,
    is_topologically_indistinguishable,
    is_transitive,
    maximal_topen_partition,
)
from semitop.topology.semitopology import SemiTopology
from semitop.verification.oracle import sample_sets

logger = logging.getLogger(__name__)

CheckFn = Callable[[SemiTopology, random.Random], List[str]]


@dataclass(frozen=True)
class Theorem:
    name: str
    description: str
    check: CheckFn


@dataclass(frozen=True)
class TheoremResult:
    name: str
    passed: bool
    violations: List[str] = field(default_factory=list)
    skipped: bool = False

    def to_dict(self) -> Dict:
        return {
            'name': self.name,
            'passed': self.passed,
            'skipped': self.skipped,
            'violations': list(self.violations),
        }


@dataclass(frozen=True)
class SuiteReport:
    space_name: str
    results: List[TheoremResult]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> List[TheoremResult]:
        return [r for r in self.results if not r.passed]

    def to_dict(self) -> Dict:
        return {
            'space': self.space_name,
            'passed': self.passed,
            'theorems': [r.to_dict() for r in self.results],
        }


def _label(space: SemiTopology, p: int) -> str:
    return space.labels[p]


# Topens and regularity

def check_partition(space: SemiTopology, rng: random.Random) -> List[str]:
    violations = []
    partition = maximal_topen_partition(space)
    for a, b in combinations(partition.topens, 2):
        if a.meets(b):
            violations.append(f"topens {space.format_set(a)} and {space.format_set(b)} overlap")
    for t in partition.topens:
        if not is_topen(space, t):
            violations.append(f"{space.format_set(t)} is not topen")
        for p in t:
            if community(space, p) != t:
                violations.append(f"{space.format_set(t)} is not the largest topen at {_label(space, p)}")
    regular = PointSet.of(space.n, (p for p in range(space.n) if is_regular(space, p)))
    if partition.covered != regular:
        violations.append(f"topens cover {space.format_set(partition.covered)}, "
                          f"regular points are {space.format_set(regular)}")
    if partition.covered | partition.residue != space.full or partition.covered.meets(partition.residue):
        violations.append("topens and residue do not partition the space")
    return violations


def check_regular_weakly_unconflicted(space: SemiTopology, rng: random.Random) -> List[str]:
    return [
        f"{_label(space, p)}: regular={is_regular(space, p)} but weakly_regular and "
        f"unconflicted={is_weakly_regular(space, p) and is_unconflicted(space, p)}"
        for p in range(space.n)
        if is_regular(space, p) != (is_weakly_regular(space, p) and is_unconflicted(space, p))
    ]


def check_regular_quasi_hypertransitive(space: SemiTopology, rng: random.Random) -> List[str]:
    space.enumerate_opens().require_exact()
    return [
        f"{_label(space, p)}: regular={is_regular(space, p)} but quasiregular and hypertransitive "
        f"disagree"
        for p in range(space.n)
        if is_regular(space, p) != (is_quasiregular(space, p) and is_hypertransitive(space, p))
    ]


def check_intertwined_as_closed_neighbourhoods(space: SemiTopology,
                                               rng: random.Random) -> List[str]:
    violations = []
    family = space.enumerate_opens().require_exact()
    for p in range(space.n):
        star = intertwined_of(space, p)
        meet = space.full
        for c in closed_neighbourhoods_of(space, p, family):
            meet = meet & c
        if meet != star:
            violations.append(f"*{_label(space, p)} = {space.format_set(star)} but closed "
                              f"neighbourhoods meet in {space.format_set(meet)}")
        if not space.is_closed(star):
            violations.append(f"*{_label(space, p)} is not closed")
        if is_weakly_regular(space, p) and space.closure(community(space, p)) != star:
            violations.append(f"closure(K({_label(space, p)})) differs from *{_label(space, p)}")
    return violations


def check_regular_minimal_closed_neighbourhood(space: SemiTopology,
                                               rng: random.Random) -> List[str]:
    """
    Regular points have a minimal ∗p; the converse needs a quasiregular community.

    A weakly regular p with minimal ∗p can still be irregular when some
    member of K(p) has an intertwined set with empty interior.
    """
    minimal = set(minimal_closed_neighbourhoods(space))
    violations = []
    for p in range(space.n):
        minimal_star = is_weakly_regular(space, p) and intertwined_of(space, p) in minimal
        if is_regular(space, p) and not minimal_star:
            violations.append(f"{_label(space, p)} is regular but *{_label(space, p)} is not "
                              f"a minimal closed neighbourhood")
        community_quasiregular = all(is_quasiregular(space, q) for q in community(space, p))
        if minimal_star and community_quasiregular and not is_regular(space, p):
            violations.append(f"{_label(space, p)} is weakly regular with minimal "
                              f"*{_label(space, p)} and quasiregular community but not regular")
    return violations


def check_interior_closure_laws(space: SemiTopology, rng: random.Random) -> List[str]:
    violations = []
    sets = sample_sets(space, rng)
    for s in sets:
        shown = space.format_set(s)
        inner, outer = space.interior(s), space.closure(s)
        if not inner <= s <= outer:
            violations.append(f"interior/closure not around {shown}")
        if space.interior(inner) != inner or space.closure(outer) != outer:
            violations.append(f"interior/closure not idempotent at {shown}")
        if outer != ~space.interior(~s):
            violations.append(f"closure({shown}) is not the complement of interior of complement")
        if space.is_closed(s) != space.is_closed_by_complement(s):
            violations.append(f"closedness characterisations disagree at {shown}")
    for a, b in combinations(sets[:32], 2):
        if a <= b and not (space.interior(a) <= space.interior(b)
                           and space.closure(a) <= space.closure(b)):
            violations.append(f"not monotone on {space.format_set(a)} <= {space.format_set(b)}")

    family = space.enumerate_opens().require_exact()
    opens, closeds = regular_opens(space, family), regular_closeds(space, family)
    forward = sorted({space.closure(o) for o in opens}, key=PointSet.sort_key)
    backward = sorted({space.interior(c) for c in closeds}, key=PointSet.sort_key)
    if forward != closeds or backward != opens or len(opens) != len(closeds):
        violations.append("closure and interior are not inverse bijections between "
                          "regular opens and regular closeds")
    return violations


def check_minimal_regular_closeds(space: SemiTopology, rng: random.Random) -> List[str]:
    family = space.enumerate_opens().require_exact()
    nonempty = [c for c in regular_closeds(space, family) if c]
    from_regular = minimal_elements(nonempty)
    from_generators = minimal_closed_neighbourhoods(space)
    if from_regular != from_generators:
        return [f"minimal regular closeds {[space.format_set(c) for c in from_regular]} differ "
                f"from minimal closed neighbourhoods "
                f"{[space.format_set(c) for c in from_generators]}"]
    return []


def check_find_regular_point(space: SemiTopology, rng: random.Random) -> List[str]:
    found = find_regular_point(space)
    exists = any(is_regular(space, p) for p in range(space.n))
    if found is not None and not is_regular(space, found):
        return [f"{_label(space, found)} returned as regular but is not"]
    if exists and found is None:
        return ["a regular point exists but none was found"]
    if space.n and is_quasiregular_space(space) and found is None:
        return ["quasiregular space without a regular point"]
    if not any(is_quasiregular(space, p) for p in range(space.n)) and found is not None:
        return [f"regular point {_label(space, found)} found with no quasiregular point"]
    return []


def check_point_closure_within_intertwined(space: SemiTopology,
                                           rng: random.Random) -> List[str]:
    violations = []
    for p in range(space.n):
        closure = space.closure(PointSet.singleton(space.n, p))
        star = intertwined_of(space, p)
        if not closure <= star:
            violations.append(f"closure({_label(space, p)}) is not inside *{_label(space, p)}")
        if space.interior(closure) and closure != star:
            violations.append(f"closure({_label(space, p)}) has interior but differs "
                              f"from *{_label(space, p)}")
    return violations


def check_intertwined_space_conditions(space: SemiTopology, rng: random.Random) -> List[str]:
    conditions = intertwined_space_conditions(space)
    if len(set(conditions.values())) > 1:
        return [f"intertwined-space characterisations disagree: {conditions}"]
    return []


def check_indistinguishable_sets_transitive(space: SemiTopology,
                                            rng: random.Random) -> List[str]:
    family = space.enumerate_opens().require_exact()
    return [
        f"{space.format_set(s)} is indistinguishable but not transitive"
        for s in sample_sets(space, rng)
        if is_topologically_indistinguishable(space, s, family) and not is_transitive(space, s)
    ]


# Values and propagation

def check_no_split_of_transitive(space: SemiTopology, rng: random.Random,
                                 assignments: int = 4) -> List[str]:
    violations = []
    transitive = [s for s in sample_sets(space, rng) if is_transitive(space, s)]
    for _ in range(assignments):
        f = random_assignment(space, rng.randint(1, 3), rng.randrange(1 << 31))
        for t in transitive:
            split = find_split(space, f, t)
            if split is not None:
                violations.append(f"transitive {space.format_set(t)} split at "
                                  f"{_label(space, split[0])}, {_label(space, split[1])}")
    return violations


def check_splitting_assignment(space: SemiTopology, rng: random.Random) -> List[str]:
    violations = []
    for t in sample_sets(space, rng):
        f = build_splitting_assignment(space, t)
        transitive = is_transitive(space, t)
        if transitive and f is not None:
            violations.append(f"splitting assignment built for transitive {space.format_set(t)}")
        if not transitive and (f is None or find_split(space, f, t) is None):
            violations.append(f"no split produced for non-transitive {space.format_set(t)}")
    return violations


def check_propagation_reaches_closure(space: SemiTopology, rng: random.Random) -> List[str]:
    violations = []
    for seed in space.neighbourhood_generators:
        result = propagate(space, seed)
        if result.reached != space.closure(seed) or result.rounds != 1:
            violations.append(f"propagation from {space.format_set(seed)} reached "
                              f"{space.format_set(result.reached)} in {result.rounds} rounds")
    return violations


def check_intertwined_agree(space: SemiTopology, rng: random.Random,
                            assignments: int = 4) -> List[str]:
    violations = []
    for _ in range(assignments):
        f = random_assignment(space, rng.randint(1, 3), rng.randrange(1 << 31))
        for p, q in disagreeing_intertwined_pairs(space, f):
            violations.append(f"intertwined {_label(space, p)}, {_label(space, q)} disagree")
    return violations


def check_continuity_characterisations(space: SemiTopology, rng: random.Random,
                                       assignments: int = 4) -> List[str]:
    violations = []
    for _ in range(assignments):
        f = random_assignment(space, rng.randint(1, 3), rng.randrange(1 << 31))
        flags = (is_continuous(space, f), preimages_open(space, f), preimages_closed(space, f))
        if len(set(flags)) > 1:
            violations.append(f"continuity characterisations disagree for {f.to_mapping(space)}")
    return violations


THEOREMS: Dict[str, Theorem] = {t.name: t for t in [
    Theorem('partition', 'Maximal topens are disjoint and cover exactly the regular points',
            check_partition),
    Theorem('regular_iff_weakly_regular_unconflicted',
            'Regular exactly when weakly regular and unconflicted',
            check_regular_weakly_unconflicted),
    Theorem('regular_iff_quasiregular_hypertransitive',
            'Regular exactly when quasiregular and hypertransitive',
            check_regular_quasi_hypertransitive),
    Theorem('intertwined_is_closed_neighbourhood_meet',
            '*p is the intersection of closed neighbourhoods; closure(K(p)) = *p when weakly regular',
            check_intertwined_as_closed_neighbourhoods),
    Theorem('regular_iff_minimal_closed_neighbourhood',
            'Regular implies a minimal *p; the converse holds once K(p) is quasiregular',
            check_regular_minimal_closed_neighbourhood),
    Theorem('interior_closure_laws',
            'Interior/closure duality, monotonicity, idempotence; regular open/closed bijection',
            check_interior_closure_laws),
    Theorem('minimal_regular_closeds',
            'Minimal nonempty regular closed sets are the minimal closed neighbourhoods',
            check_minimal_regular_closeds),
    Theorem('find_regular_point',
            'The regular point search is exact and succeeds on quasiregular spaces',
            check_find_regular_point),
    Theorem('point_closure_within_intertwined',
            'closure(p) is inside *p, with equality when it has nonempty interior',
            check_point_closure_within_intertwined),
    Theorem('intertwined_space_conditions',
            'The characterisations of an intertwined space agree',
            check_intertwined_space_conditions),
    Theorem('indistinguishable_sets_transitive',
            'Topologically indistinguishable sets are transitive',
            check_indistinguishable_sets_transitive),
    Theorem('no_split_of_transitive', 'No value assignment splits a transitive set',
            check_no_split_of_transitive),
    Theorem('splitting_assignment', 'A splitting assignment exists exactly for non-transitive sets',
            check_splitting_assignment),
    Theorem('propagation_reaches_closure', 'Propagation from an open seed reaches its closure '
            'in one round', check_propagation_reaches_closure),
    Theorem('intertwined_agree', 'Intertwined points continuous at both ends agree',
            check_intertwined_agree),
    Theorem('continuity_characterisations',
            'Continuity agrees with open preimages and with closed preimages',
            check_continuity_characterisations),
]}


def list_theorems() -> List[str]:
    return list(THEOREMS)


def run_theorem(space: SemiTopology, name: str, seed: int = 0) -> TheoremResult:
    try:
        theorem = THEOREMS[name]
    except KeyError:
        raise BadParams(
            f"Unknown theorem: '{name}'. Available theorems: {', '.join(THEOREMS)}"
        ) from None
    try:
        violations = theorem.check(space, random.Random(seed))
    except FamilyTruncated as e:
        logger.warning(f"Skipping {name} on {space.name or 'space'}: {e}")
        return TheoremResult(name=name, passed=True, skipped=True)
    for violation in violations:
        logger.error(f"{name} violated on {space.name or 'space'}: {violation}")
    return TheoremResult(name=name, passed=not violations, violations=violations)


def run_suite(space: SemiTopology, names: Optional[Sequence[str]] = None,
              seed: int = 0) -> SuiteReport:
    """
    Run the named theorems (all by default) against one space.

    Theorems that need the exact open family are skipped when it was
    truncated.
    """
    selected = list(names) if names else list(THEOREMS)
    results = [run_theorem(space, name, seed) for name in selected]
    report = SuiteReport(space_name=space.name, results=results)
    logger.info(f"Theorem suite on {space.name or 'space'}: "
                f"{len(results) - len(report.failures)}/{len(results)} passed")
    return report
