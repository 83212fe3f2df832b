"""
Intersection Relations and Topens
Between, transitivity, intertwined points and the maximal-topen partition
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Dict, List, Optional, Tuple

from semitop.errors import NotTopen
from semitop.topology.pointset import PointSet, canonical_sorted
from semitop.topology.semitopology import OpenFamily, SemiTopology

logger = logging.getLogger(__name__)


def between(x: PointSet, y: PointSet) -> bool:
    """X ⋔ Y: the sets intersect. Never true when either is empty."""
    return x.meets(y)


def between_in(x: PointSet, y: PointSet, z: PointSet) -> bool:
    """X ⋔_Y Z: X and Z intersect inside Y."""
    return not (x & y & z).is_empty()


def is_transitive(space: SemiTopology, t: PointSet) -> bool:
    """
    O ⋔ T ⋔ O' implies O ⋔ O' for all opens O, O'.

    Checking generators suffices: if O ⋔ T then some generator inside O
    already meets T, and two such generators meeting forces O ⋔ O'.
    """
    touching = [g for g in space.neighbourhood_generators if g.meets(t)]
    return all(a.meets(b) for a, b in combinations(touching, 2))


def is_strongly_transitive(space: SemiTopology, t: PointSet) -> bool:
    """
    O ⋔ T ⋔ O' implies O ⋔_T O'.

    Same generator reduction as transitivity; the witness intersection
    found for two generators lies inside the opens that contain them.
    """
    touching = [g for g in space.neighbourhood_generators if g.meets(t)]
    return all(
        not (a & b & t).is_empty()
        for a, b in combinations(touching, 2)
    )


def is_topen(space: SemiTopology, t: PointSet) -> bool:
    """Nonempty, open and transitive."""
    return bool(t) and space.is_open(t) and is_transitive(space, t)


def is_strong_topen(space: SemiTopology, t: PointSet) -> bool:
    """Nonempty, open and strongly transitive."""
    return bool(t) and space.is_open(t) and is_strongly_transitive(space, t)


def is_hyperconnected(space: SemiTopology, t: PointSet) -> bool:
    """
    All nonempty open subsets of T pairwise intersect.

    Every nonempty open subset of T contains a generator inside T, so it is
    enough that those generators pairwise intersect.
    """
    inside = [g for g in space.neighbourhood_generators if g <= t]
    return all(a.meets(b) for a, b in combinations(inside, 2))


def intertwined(space: SemiTopology, p: int, q: int) -> bool:
    """p ⋒ q: every neighbourhood of p meets every neighbourhood of q."""
    return all(
        a.meets(b)
        for a in space.generators_at(p)
        for b in space.generators_at(q)
    )


@lru_cache(maxsize=512)
def intertwined_table(space: SemiTopology) -> Tuple[PointSet, ...]:
    """∗p for every point p, computed once per space."""
    n = space.n
    rows = [0] * n
    for p in range(n):
        rows[p] |= 1 << p
        for q in range(p + 1, n):
            if intertwined(space, p, q):
                rows[p] |= 1 << q
                rows[q] |= 1 << p
    return tuple(PointSet(bits, n) for bits in rows)


def intertwined_of(space: SemiTopology, p: int) -> PointSet:
    """∗p: the set of points intertwined with p (always a closed set)."""
    return intertwined_table(space)[p]


def intertwined_space_conditions(space: SemiTopology) -> Dict[str, bool]:
    """
    The equivalent characterisations of an intertwined space, each computed
    independently so callers can confirm they agree.
    """
    full = space.full
    table = intertwined_table(space)
    nonempty = [g for g in space.neighbourhood_generators if g]
    return {
        'points_pairwise_intertwined': all(row == full for row in table),
        'nonempty_opens_intersect': all(a.meets(b) for a, b in combinations(nonempty, 2)),
        'space_transitive': is_transitive(space, full),
        'space_hyperconnected': is_hyperconnected(space, full),
    }


def is_intertwined_space(space: SemiTopology) -> bool:
    """All points pairwise intertwined; equivalently all nonempty opens meet."""
    conditions = intertwined_space_conditions(space)
    if len(set(conditions.values())) != 1:
        # the characterisations are provably equivalent
        logger.error(f"Intertwined-space characterisations disagree: {conditions}")
    return conditions['points_pairwise_intertwined']


def is_topologically_indistinguishable(space: SemiTopology, s: PointSet,
                                       family: Optional[OpenFamily] = None) -> bool:
    """S ⋔ O iff S ⊆ O, for every open O. Such sets are transitive."""
    family = (family or space.enumerate_opens()).require_exact()
    return all(s.meets(o) == (s <= o) for o in family)


def is_hausdorff(space: SemiTopology) -> bool:
    """Every point is intertwined only with itself."""
    return all(len(row) == 1 for row in intertwined_table(space))


@dataclass(frozen=True)
class TopenPartition:
    """
    Maximal topens of a space and the points lying in none of them.

    Topens are pairwise disjoint and listed in canonical set order; their
    union together with the residue is the whole space.
    """
    topens: Tuple[PointSet, ...]
    residue: PointSet

    @property
    def covered(self) -> PointSet:
        bits = 0
        for t in self.topens:
            bits |= t.bits
        return PointSet(bits, self.residue.n)

    def to_dict(self, space: SemiTopology) -> Dict:
        return {
            'topens': [space.labels_of(t) for t in self.topens],
            'residue': space.labels_of(self.residue),
        }


def maximal_topen_partition(space: SemiTopology) -> TopenPartition:
    """
    Partition into maximal topens plus residue.

    A point lies in some topen exactly when it is regular, and then its
    community is the greatest topen containing it; the maximal topens are
    therefore the distinct communities of regular points.
    """
    from semitop.topology.classification import community, is_regular

    topens = canonical_sorted(
        community(space, p) for p in range(space.n) if is_regular(space, p)
    )
    covered = 0
    for t in topens:
        covered |= t.bits
    residue = ~PointSet(covered, space.n)
    logger.debug(f"Partition of {space.name or 'space'}: {len(topens)} topens, "
                 f"residue {space.format_set(residue)}")
    return TopenPartition(tuple(topens), residue)


def maximal_topen_containing(space: SemiTopology, t: PointSet) -> PointSet:
    """
    The unique maximal topen containing topen T.

    Raises:
        NotTopen: if T is not topen
    """
    from semitop.topology.classification import community

    if not is_topen(space, t):
        raise NotTopen(f"{space.format_set(t)} is not topen")
    return community(space, next(iter(t)))


def is_meet_irreducible_empty(space: SemiTopology, t: PointSet) -> bool:
    """
    In the subspace on T, no two nonempty opens are disjoint.

    Equivalent to T being strongly transitive.
    """
    sub = space.subspace(t)
    return all(a.meets(b) for a, b in combinations(sub.basis, 2))


def intertwined_pairs(space: SemiTopology) -> List[Tuple[int, int]]:
    """All unordered pairs p < q with p ⋒ q."""
    table = intertwined_table(space)
    return [(p, q) for p in range(space.n) for q in table[p] if p < q]
