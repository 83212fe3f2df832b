"""
Value Assignments and Closure Propagation
Continuity as local agreement, split detection, and propagation of agreed values
"""

import logging
import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Optional, Tuple

from semitop.errors import BadParams, SeedEmpty, SeedNotOpen
from semitop.topology.pointset import PointSet
from semitop.topology.relations import intertwined_pairs, maximal_topen_partition
from semitop.topology.semitopology import SemiTopology

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ValueAssignment:
    """
    Total map from points to values.

    Values are dense ids into ``value_labels``; the value set carries the
    discrete semitopology, so continuity at p means f is constant on some
    open neighbourhood of p.
    """
    values: Tuple[int, ...]
    value_labels: Tuple[str, ...] = ("A", "B")

    def __post_init__(self) -> None:
        if not self.value_labels:
            raise BadParams("A value assignment needs at least one value label")
        if len(set(self.value_labels)) != len(self.value_labels):
            raise BadParams(f"Value labels must be unique: {list(self.value_labels)}")
        for p, v in enumerate(self.values):
            if not 0 <= v < len(self.value_labels):
                raise BadParams(f"Point {p} has value id {v} outside 0..{len(self.value_labels) - 1}")

    @classmethod
    def constant(cls, n: int, label: str = "A") -> "ValueAssignment":
        return cls(values=(0,) * n, value_labels=(label,))

    @classmethod
    def from_labels(cls, space: SemiTopology, mapping: Dict[str, str]) -> "ValueAssignment":
        """
        Build from a label -> value-string map covering every point.

        Value ids are assigned in order of first appearance along the points.
        """
        missing = [label for label in space.labels if label not in mapping]
        if missing:
            raise BadParams(f"Assignment missing points: {', '.join(missing)}")
        extra = set(mapping) - set(space.labels)
        if extra:
            raise BadParams(f"Assignment names unknown points: {', '.join(sorted(extra))}")
        value_labels: List[str] = []
        for label in space.labels:
            if mapping[label] not in value_labels:
                value_labels.append(mapping[label])
        ids = tuple(value_labels.index(mapping[label]) for label in space.labels)
        return cls(values=ids, value_labels=tuple(value_labels) or ("A",))

    @classmethod
    def random(cls, n: int, value_count: int, rng: random.Random) -> "ValueAssignment":
        labels = tuple(chr(ord("A") + i) for i in range(value_count))
        return cls(values=tuple(rng.randrange(value_count) for _ in range(n)),
                   value_labels=labels)

    def __call__(self, p: int) -> int:
        return self.values[p]

    def label_of(self, p: int) -> str:
        return self.value_labels[self.values[p]]

    def preimage(self, value: int) -> PointSet:
        return PointSet.of(len(self.values), (p for p, v in enumerate(self.values) if v == value))

    def to_mapping(self, space: SemiTopology) -> Dict[str, str]:
        return {space.labels[p]: self.label_of(p) for p in range(space.n)}


def _require_fits(space: SemiTopology, f: ValueAssignment) -> None:
    if len(f.values) != space.n:
        raise BadParams(f"Assignment covers {len(f.values)} points but the space has {space.n}")


def continuous_at(space: SemiTopology, f: ValueAssignment, p: int) -> bool:
    """
    Some open neighbourhood of p has f constant on it.

    If f is constant on an open neighbourhood it is constant on any
    generator inside it that contains p, so generators suffice.
    """
    _require_fits(space, f)
    return any(
        len({f(q) for q in g}) == 1
        for g in space.generators_at(p)
    )


def continuous_on(space: SemiTopology, f: ValueAssignment, s: PointSet) -> bool:
    _require_fits(space, f)
    return all(continuous_at(space, f, p) for p in s)


def is_continuous(space: SemiTopology, f: ValueAssignment) -> bool:
    return continuous_on(space, f, space.full)


def preimages_open(space: SemiTopology, f: ValueAssignment) -> bool:
    """Global continuity via preimages: f⁻¹(v) is open for every value v."""
    _require_fits(space, f)
    return all(space.is_open(f.preimage(v)) for v in range(len(f.value_labels)))


def preimages_closed(space: SemiTopology, f: ValueAssignment) -> bool:
    """
    Preimage of every closed value set is closed.

    In the discrete value space every set is closed, so this asks that
    each union of value classes has a closed preimage.
    """
    _require_fits(space, f)
    value_count = len(f.value_labels)
    for mask in range(1 << value_count):
        chosen = {v for v in range(value_count) if mask >> v & 1}
        pre = PointSet.of(space.n, (p for p in range(space.n) if f(p) in chosen))
        if not space.is_closed(pre):
            return False
    return True


def find_split(space: SemiTopology, f: ValueAssignment, t: PointSet) -> Optional[Tuple[int, int]]:
    """
    Two points of T where f is continuous yet takes different values.

    Never found when T is transitive.
    """
    _require_fits(space, f)
    continuous = [p for p in t if continuous_at(space, f, p)]
    for p, q in combinations(continuous, 2):
        if f(p) != f(q):
            return (p, q)
    return None


def build_splitting_assignment(space: SemiTopology, t: PointSet) -> Optional[ValueAssignment]:
    """
    A two-valued assignment that splits T, or None when T is transitive.

    Non-transitivity yields disjoint generators G, G' both meeting T. Paint
    G with one value and everything else with the other: f is continuous
    on G and on G', so a point of G ∩ T and a point of G' ∩ T are split.
    """
    touching = [g for g in space.neighbourhood_generators if g.meets(t)]
    for a, b in combinations(touching, 2):
        if not a.meets(b):
            values = tuple(0 if p in a else 1 for p in range(space.n))
            logger.debug(f"Splitting {space.format_set(t)} along {space.format_set(a)} "
                         f"vs {space.format_set(b)}")
            return ValueAssignment(values=values, value_labels=("v", "v'"))
    return None


def disagreeing_intertwined_pairs(space: SemiTopology, f: ValueAssignment) -> List[Tuple[int, int]]:
    """Intertwined pairs, continuous at both ends, with different values."""
    _require_fits(space, f)
    return [
        (p, q) for p, q in intertwined_pairs(space)
        if f(p) != f(q) and continuous_at(space, f, p) and continuous_at(space, f, q)
    ]


@dataclass(frozen=True)
class PropagationResult:
    """
    Outcome of propagating an agreed value from an open seed.

    ``committed_grade2`` is the seed itself; ``committed_grade1`` are the
    points forced to follow. Their union is closure(seed).
    """
    seed: PointSet
    value: int
    committed_grade2: PointSet
    committed_grade1: PointSet
    rounds: int
    trace: Tuple[PointSet, ...] = field(default=())

    @property
    def reached(self) -> PointSet:
        return self.committed_grade2 | self.committed_grade1

    def to_dict(self, space: SemiTopology, value_label: str) -> Dict:
        return {
            'seed': space.labels_of(self.seed),
            'value': value_label,
            'grade2': space.labels_of(self.committed_grade2),
            'grade1': space.labels_of(self.committed_grade1),
            'rounds': self.rounds,
            'trace': [space.labels_of(s) for s in self.trace],
        }


def _propagation_step(space: SemiTopology, current: PointSet) -> PointSet:
    bits = current.bits
    for p in range(space.n):
        if all(g.meets(current) for g in space.generators_at(p)):
            bits |= 1 << p
    return PointSet(bits, space.n)


def propagate(space: SemiTopology, seed: PointSet, value: int = 0) -> PropagationResult:
    """
    Spread a value agreed on by an open seed.

    A point follows once every one of its neighbourhoods contains a
    committed point. The fixpoint is closure(seed), reached after one round.

    Raises:
        SeedEmpty: if the seed is empty
        SeedNotOpen: if the seed is not open
    """
    if seed.is_empty():
        raise SeedEmpty("Propagation seed must be nonempty")
    if not space.is_open(seed):
        raise SeedNotOpen(f"Propagation seed {space.format_set(seed)} is not open")

    trace = [seed]
    current = _propagation_step(space, seed)
    rounds = 1
    trace.append(current)
    while True:
        following = _propagation_step(space, current)
        if following == current:
            break
        rounds += 1
        current = following
        trace.append(current)
        logger.debug(f"Propagation round {rounds}: {space.format_set(current)}")

    return PropagationResult(
        seed=seed,
        value=value,
        committed_grade2=seed,
        committed_grade1=current - seed,
        rounds=rounds,
        trace=tuple(trace),
    )


def topen_reached_by(space: SemiTopology, seed: PointSet) -> List[PointSet]:
    """
    Maximal topens meeting an open seed; each lies inside closure(seed).

    Raises:
        SeedNotOpen: if the seed is not open
    """
    if not space.is_open(seed):
        raise SeedNotOpen(f"Seed {space.format_set(seed)} is not open")
    return [t for t in maximal_topen_partition(space).topens if t.meets(seed)]


def random_assignment(space: SemiTopology, value_count: int, seed: int) -> ValueAssignment:
    """Deterministic random assignment, used by property checks."""
    if value_count < 1:
        raise BadParams(f"value_count must be positive, got {value_count}")
    return ValueAssignment.random(space.n, value_count, random.Random(seed))
