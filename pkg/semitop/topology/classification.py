"""
Point Classification
Communities, the regularity taxonomy, closed neighbourhoods and regular open/closed sets
"""

import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Tuple

from semitop.errors import FamilyTruncated
from semitop.topology.pointset import PointSet, canonical_sorted, minimal_elements
from semitop.topology.relations import intertwined_of, intertwined_table, is_topen
from semitop.topology.semitopology import OpenFamily, SemiTopology

logger = logging.getLogger(__name__)


class RegularityLevel(str, Enum):
    """Strongest regularity property a point has."""
    REGULAR = "regular"
    WEAKLY_REGULAR = "weakly_regular"
    QUASIREGULAR = "quasiregular"
    IRREGULAR = "irregular"


@dataclass(frozen=True)
class PointClassification:
    """Classification row for a single point."""
    point: int
    intertwined: PointSet
    community: PointSet
    regular: bool
    weakly_regular: bool
    quasiregular: bool
    unconflicted: bool
    hypertransitive: bool
    hypertransitive_known: bool = True

    @property
    def conflicted(self) -> bool:
        return not self.unconflicted

    @property
    def level(self) -> RegularityLevel:
        if self.regular:
            return RegularityLevel.REGULAR
        if self.weakly_regular:
            return RegularityLevel.WEAKLY_REGULAR
        if self.quasiregular:
            return RegularityLevel.QUASIREGULAR
        return RegularityLevel.IRREGULAR

    def to_dict(self, space: SemiTopology) -> Dict:
        return {
            'point': space.labels[self.point],
            'intertwined': space.labels_of(self.intertwined),
            'community': space.labels_of(self.community),
            'regular': self.regular,
            'weakly_regular': self.weakly_regular,
            'quasiregular': self.quasiregular,
            'unconflicted': self.unconflicted,
            'hypertransitive': self.hypertransitive if self.hypertransitive_known else None,
        }


@dataclass(frozen=True)
class Classification:
    """Per-point classification table for a whole space."""
    rows: Tuple[PointClassification, ...]

    def __getitem__(self, p: int) -> PointClassification:
        return self.rows[p]

    def __iter__(self) -> Iterator[PointClassification]:
        return iter(self.rows)

    def __len__(self) -> int:
        return len(self.rows)

    def points_where(self, flag: str) -> List[int]:
        return [row.point for row in self.rows if getattr(row, flag)]

    def to_dict(self, space: SemiTopology) -> Dict:
        return {'points': [row.to_dict(space) for row in self.rows]}


@lru_cache(maxsize=512)
def community_table(space: SemiTopology) -> Tuple[PointSet, ...]:
    return tuple(space.interior(row) for row in intertwined_table(space))


def community(space: SemiTopology, p: int) -> PointSet:
    """K(p) = interior(∗p). Always open, and always a regular open set."""
    return community_table(space)[p]


def is_weakly_regular(space: SemiTopology, p: int) -> bool:
    return p in community(space, p)


def is_quasiregular(space: SemiTopology, p: int) -> bool:
    return not community(space, p).is_empty()


def is_regular(space: SemiTopology, p: int) -> bool:
    """p ∈ K(p) and K(p) is topen."""
    k = community(space, p)
    return p in k and is_topen(space, k)


def is_unconflicted(space: SemiTopology, p: int) -> bool:
    """q ⋒ p ⋒ r implies q ⋒ r."""
    table = intertwined_table(space)
    around = table[p]
    return all(around <= table[q] for q in around)


def is_conflicted(space: SemiTopology, p: int) -> bool:
    return not is_unconflicted(space, p)


# Regular open and regular closed sets

def is_regular_open(space: SemiTopology, s: PointSet) -> bool:
    return space.interior(space.closure(s)) == s


def is_regular_closed(space: SemiTopology, s: PointSet) -> bool:
    return space.closure(space.interior(s)) == s


def regular_opens(space: SemiTopology, family: Optional[OpenFamily] = None) -> List[PointSet]:
    """All regular open sets: interior(closure(O)) over the exact open family."""
    family = (family or space.enumerate_opens()).require_exact()
    return canonical_sorted(space.interior(space.closure(o)) for o in family)


def regular_closeds(space: SemiTopology, family: Optional[OpenFamily] = None) -> List[PointSet]:
    """All regular closed sets: closure(interior(C)) over the closed sets."""
    family = (family or space.enumerate_opens()).require_exact()
    return canonical_sorted(space.closure(space.interior(~o)) for o in family)


@lru_cache(maxsize=512)
def regular_open_table(space: SemiTopology) -> Tuple[PointSet, ...]:
    """Regular opens over the default open family, computed once per space."""
    return tuple(regular_opens(space))


def is_hypertransitive(space: SemiTopology, p: int,
                       family: Optional[OpenFamily] = None) -> bool:
    """
    Opens that each meet every neighbourhood of p must meet each other.

    Only regular opens need checking: interior(closure(O)) has the same
    closure as O and meets another such set exactly when O does.

    Raises:
        FamilyTruncated: if the open family was capped
    """
    opens = regular_open_table(space) if family is None else regular_opens(space, family)
    candidates = [
        r for r in opens
        if p in space.closure(r)
    ]
    return all(a.meets(b) for i, a in enumerate(candidates) for b in candidates[i + 1:])


# Closed neighbourhoods

def is_closed_neighbourhood(space: SemiTopology, c: PointSet, p: int) -> bool:
    """C is closed and p lies in its interior."""
    return space.is_closed(c) and p in space.interior(c)


def closed_neighbourhoods_of(space: SemiTopology, p: int,
                             family: Optional[OpenFamily] = None) -> List[PointSet]:
    """Every closed set whose interior contains p; ∗p is their intersection."""
    family = (family or space.enumerate_opens()).require_exact()
    return canonical_sorted(
        ~o for o in family if p in space.interior(~o)
    )


def minimal_closed_neighbourhoods(space: SemiTopology) -> List[PointSet]:
    """
    Inclusion-minimal closed sets with nonempty interior.

    A closed neighbourhood C has some nonempty generator G inside its
    interior, so closure(G) ⊆ C and closure(G) is itself a closed
    neighbourhood. The minimal ones are thus the minimal closures of
    nonempty generators.
    """
    if space.n == 0:
        return []
    return minimal_elements(space.closure(g) for g in space.neighbourhood_generators)


# Boundaries and preorders

def boundary(space: SemiTopology, s: PointSet) -> PointSet:
    """S minus its interior."""
    return s - space.interior(s)


def kiss(space: SemiTopology, s: PointSet, t: PointSet) -> PointSet:
    """Kissing set: boundary(S) ∩ boundary(T)."""
    return boundary(space, s) & boundary(space, t)


def intertwined_preorder_leq(space: SemiTopology, p: int, q: int) -> bool:
    """p ≤⋒ q when ∗p ⊆ ∗q."""
    return intertwined_of(space, p) <= intertwined_of(space, q)


def specialisation_leq(space: SemiTopology, p: int, q: int) -> bool:
    """Classical specialisation preorder: closure(p) ⊆ closure(q)."""
    return space.closure(PointSet.singleton(space.n, p)) <= \
        space.closure(PointSet.singleton(space.n, q))


def find_regular_point(space: SemiTopology) -> Optional[int]:
    """
    A regular point, if any exists.

    From a quasiregular start, repeatedly move into the community towards a
    point with strictly smaller ∗. When no member of K(p) is smaller, every
    member q has ∗q = ∗p, so K(q) = K(p) ∋ q is a topen and q is regular.
    Every finite quasiregular space yields a result from its first start.
    """
    table = intertwined_table(space)
    for start in range(space.n):
        p = start
        while True:
            k = community(space, p)
            if k.is_empty():
                break
            smaller = next((q for q in k if table[q] < table[p]), None)
            if smaller is None:
                candidate = next(iter(k))
                if is_regular(space, candidate):
                    logger.debug(f"Regular point {space.labels[candidate]} found from "
                                 f"{space.labels[start]}")
                    return candidate
                break
            p = smaller
    return None


# Whole-table classification

def classify(space: SemiTopology, p: int,
             family: Optional[OpenFamily] = None) -> PointClassification:
    """Classification row for p; hypertransitivity is unknown on a truncated family."""
    try:
        hypertransitive, known = is_hypertransitive(space, p, family), True
    except FamilyTruncated:
        hypertransitive, known = False, False
    return PointClassification(
        point=p,
        intertwined=intertwined_of(space, p),
        community=community(space, p),
        regular=is_regular(space, p),
        weakly_regular=is_weakly_regular(space, p),
        quasiregular=is_quasiregular(space, p),
        unconflicted=is_unconflicted(space, p),
        hypertransitive=hypertransitive,
        hypertransitive_known=known,
    )


def classify_all(space: SemiTopology, family: Optional[OpenFamily] = None) -> Classification:
    rows = tuple(classify(space, p, family) for p in range(space.n))
    logger.info(f"Classified {space.n} points of {space.name or 'space'}: "
                f"{sum(r.regular for r in rows)} regular")
    return Classification(rows)


def is_regular_space(space: SemiTopology) -> bool:
    return all(is_regular(space, p) for p in range(space.n))


def is_weakly_regular_space(space: SemiTopology) -> bool:
    return all(is_weakly_regular(space, p) for p in range(space.n))


def is_quasiregular_space(space: SemiTopology) -> bool:
    return all(is_quasiregular(space, p) for p in range(space.n))


def is_conflicted_space(space: SemiTopology) -> bool:
    """Every point is conflicted."""
    return space.n > 0 and all(is_conflicted(space, p) for p in range(space.n))
