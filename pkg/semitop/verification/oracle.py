"""
Brute-Force Oracle
Every predicate evaluated literally over the full family of open sets
"""

import logging
import random
from dataclasses import dataclass
from itertools import combinations
from typing import Any, Callable, Dict, List, Optional, Tuple

from semitop.errors import FamilyTruncated
from semitop.topology.pointset import PointSet
from semitop.topology.semitopology import SemiTopology

logger = logging.getLogger(__name__)


class OracleSpace:
    """
    Literal reading of the definitions over an explicitly enumerated family.

    The family is built by closing ∅, P and the generators under pairwise
    union until nothing new appears. Nothing here calls the fast paths.
    """

    def __init__(self, space: SemiTopology, cap: int = 4096) -> None:
        self.space = space
        self.n = space.n
        self.full = PointSet.full(self.n)
        self.empty = PointSet.empty(self.n)
        self.opens = self._enumerate(cap)
        self._open_bits = {o.bits for o in self.opens}

    def _enumerate(self, cap: int) -> List[PointSet]:
        family = {0, self.full.bits} | {g.bits for g in self.space.basis}
        frontier = set(family)
        while frontier:
            fresh = {a | b for a in frontier for b in family} - family
            family |= fresh
            if len(family) > cap:
                raise FamilyTruncated(f"Oracle family exceeds {cap} opens")
            frontier = fresh
        return [PointSet(bits, self.n) for bits in sorted(family)]

    # Sets

    def is_open(self, s: PointSet) -> bool:
        return s.bits in self._open_bits

    def is_closed(self, s: PointSet) -> bool:
        return (~s).bits in self._open_bits

    def interior(self, s: PointSet) -> PointSet:
        result = self.empty
        for o in self.opens:
            if o <= s:
                result = result | o
        return result

    def nbhd(self, p: int) -> List[PointSet]:
        return [o for o in self.opens if p in o]

    def closure(self, s: PointSet) -> PointSet:
        return PointSet.of(self.n, (
            p for p in range(self.n) if all(o.meets(s) for o in self.nbhd(p))
        ))

    def closed_sets(self) -> List[PointSet]:
        return [~o for o in self.opens]

    # Relations

    def intertwined(self, p: int, q: int) -> bool:
        return all(a.meets(b) for a in self.nbhd(p) for b in self.nbhd(q))

    def intertwined_set(self, p: int) -> PointSet:
        return PointSet.of(self.n, (q for q in range(self.n) if self.intertwined(p, q)))

    def is_transitive(self, t: PointSet) -> bool:
        touching = [o for o in self.opens if o.meets(t)]
        return all(a.meets(b) for a in touching for b in touching)

    def is_strongly_transitive(self, t: PointSet) -> bool:
        touching = [o for o in self.opens if o.meets(t)]
        return all((a & b & t) for a in touching for b in touching)

    def is_topen(self, t: PointSet) -> bool:
        return bool(t) and self.is_open(t) and self.is_transitive(t)

    def is_strong_topen(self, t: PointSet) -> bool:
        return bool(t) and self.is_open(t) and self.is_strongly_transitive(t)

    def is_hyperconnected(self, t: PointSet) -> bool:
        inside = [o for o in self.opens if o and o <= t]
        return all(a.meets(b) for a in inside for b in inside)

    # Points

    def community(self, p: int) -> PointSet:
        return self.interior(self.intertwined_set(p))

    def is_regular(self, p: int) -> bool:
        k = self.community(p)
        return p in k and self.is_topen(k)

    def is_weakly_regular(self, p: int) -> bool:
        return p in self.community(p)

    def is_quasiregular(self, p: int) -> bool:
        return bool(self.community(p))

    def is_unconflicted(self, p: int) -> bool:
        for q in range(self.n):
            for r in range(self.n):
                if self.intertwined(q, p) and self.intertwined(p, r) and not self.intertwined(q, r):
                    return False
        return True

    def is_hypertransitive(self, p: int) -> bool:
        """Any two opens that each meet every neighbourhood of p meet each other."""
        neighbourhoods = self.nbhd(p)
        hitting = [o for o in self.opens if all(o.meets(u) for u in neighbourhoods)]
        return all(a.meets(b) for a in hitting for b in hitting)

    # Closed neighbourhoods and regular sets

    def minimal_closed_neighbourhoods(self) -> List[PointSet]:
        candidates = [c for c in self.closed_sets() if self.interior(c)]
        minimal = {c for c in candidates if not any(d < c for d in candidates)}
        return sorted(minimal, key=lambda s: (len(s), s.indices()))

    def regular_opens(self) -> List[PointSet]:
        found = {o for o in self.opens if self.interior(self.closure(o)) == o}
        return sorted(found, key=lambda s: (len(s), s.indices()))

    def regular_closeds(self) -> List[PointSet]:
        found = {c for c in self.closed_sets() if self.closure(self.interior(c)) == c}
        return sorted(found, key=lambda s: (len(s), s.indices()))

    # Values

    def continuous_at(self, values: Tuple[int, ...], p: int) -> bool:
        return any(len({values[q] for q in o}) == 1 for o in self.nbhd(p))


@dataclass(frozen=True)
class OracleReport:
    """One fast-path result compared against the oracle."""
    predicate: str
    instance: str
    argument: str
    fast: Any
    oracle: Any

    @property
    def agree(self) -> bool:
        return self.fast == self.oracle

    def to_dict(self, space: SemiTopology) -> Dict:
        def render(value: Any) -> Any:
            if isinstance(value, PointSet):
                return space.labels_of(value)
            if isinstance(value, list):
                return [render(v) for v in value]
            return value
        return {
            'predicate': self.predicate,
            'instance': self.instance,
            'argument': self.argument,
            'fast': render(self.fast),
            'oracle': render(self.oracle),
            'agree': self.agree,
        }


def sample_sets(space: SemiTopology, rng: random.Random, limit: int = 24) -> List[PointSet]:
    """Every subset for small spaces, otherwise singletons, pairs and random subsets."""
    n = space.n
    if n <= 4:
        return [PointSet(bits, n) for bits in range(1 << n)]
    sets = {PointSet.empty(n), PointSet.full(n)}
    sets |= {PointSet.singleton(n, p) for p in range(n)}
    sets |= {PointSet.of(n, pair) for pair in combinations(range(n), 2)}
    sets |= set(space.basis)
    chosen = sorted(sets, key=lambda s: (len(s), s.indices()))
    while len(chosen) < limit + n:
        chosen.append(PointSet(rng.randrange(1 << n), n))
    return chosen


def compare_with_oracle(space: SemiTopology, seed: int = 0,
                        oracle: Optional[OracleSpace] = None) -> List[OracleReport]:
    """
    Evaluate every fast-path predicate alongside the oracle.

    Raises:
        FamilyTruncated: if the instance has too many opens for the oracle
    """
    from semitop.consensus.value_assignment import continuous_at, random_assignment
    from semitop.topology import classification as fast_class
    from semitop.topology import relations as fast_rel

    oracle = oracle or OracleSpace(space)
    rng = random.Random(seed)
    instance = space.name or repr(space)
    reports: List[OracleReport] = []

    def record(predicate: str, argument: str, fast: Any, literal: Any) -> None:
        reports.append(OracleReport(predicate, instance, argument, fast, literal))

    fast_family = space.enumerate_opens().require_exact()
    record('open_family', '-', sorted(fast_family, key=lambda s: (len(s), s.indices())),
           sorted(oracle.opens, key=lambda s: (len(s), s.indices())))

    set_checks: List[Tuple[str, Callable, Callable]] = [
        ('is_open', space.is_open, oracle.is_open),
        ('is_closed', space.is_closed, oracle.is_closed),
        ('interior', space.interior, oracle.interior),
        ('closure', space.closure, oracle.closure),
        ('is_transitive', lambda s: fast_rel.is_transitive(space, s), oracle.is_transitive),
        ('is_strongly_transitive', lambda s: fast_rel.is_strongly_transitive(space, s),
         oracle.is_strongly_transitive),
        ('is_topen', lambda s: fast_rel.is_topen(space, s), oracle.is_topen),
        ('is_strong_topen', lambda s: fast_rel.is_strong_topen(space, s), oracle.is_strong_topen),
        ('is_hyperconnected', lambda s: fast_rel.is_hyperconnected(space, s),
         oracle.is_hyperconnected),
    ]
    for s in sample_sets(space, rng):
        argument = space.format_set(s)
        for name, fast, literal in set_checks:
            record(name, argument, fast(s), literal(s))

    point_checks: List[Tuple[str, Callable, Callable]] = [
        ('intertwined_set', lambda p: fast_rel.intertwined_of(space, p), oracle.intertwined_set),
        ('community', lambda p: fast_class.community(space, p), oracle.community),
        ('regular', lambda p: fast_class.is_regular(space, p), oracle.is_regular),
        ('weakly_regular', lambda p: fast_class.is_weakly_regular(space, p),
         oracle.is_weakly_regular),
        ('quasiregular', lambda p: fast_class.is_quasiregular(space, p), oracle.is_quasiregular),
        ('unconflicted', lambda p: fast_class.is_unconflicted(space, p), oracle.is_unconflicted),
        ('hypertransitive', lambda p: fast_class.is_hypertransitive(space, p, fast_family),
         oracle.is_hypertransitive),
    ]
    for p in range(space.n):
        for name, fast, literal in point_checks:
            record(name, space.labels[p], fast(p), literal(p))
        for q in range(p + 1, space.n):
            record('intertwined', f"{space.labels[p]},{space.labels[q]}",
                   fast_rel.intertwined(space, p, q), oracle.intertwined(p, q))

    record('minimal_closed_neighbourhoods', '-',
           fast_class.minimal_closed_neighbourhoods(space),
           oracle.minimal_closed_neighbourhoods())
    record('regular_opens', '-', fast_class.regular_opens(space, fast_family),
           oracle.regular_opens())
    record('regular_closeds', '-', fast_class.regular_closeds(space, fast_family),
           oracle.regular_closeds())

    if space.n:
        f = random_assignment(space, value_count=rng.randint(1, 3), seed=rng.randrange(1 << 31))
        for p in range(space.n):
            record('continuous_at', f"{space.labels[p]}:{f.label_of(p)}",
                   continuous_at(space, f, p), oracle.continuous_at(f.values, p))

    disagreements = [r for r in reports if not r.agree]
    for report in disagreements:
        logger.error(f"Oracle disagreement on {report.instance}: {report.predicate}"
                     f"({report.argument}) fast={report.fast} oracle={report.oracle}")
    logger.debug(f"Compared {len(reports)} results on {instance}, "
                 f"{len(disagreements)} disagreements")
    return reports
