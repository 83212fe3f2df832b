"""
Finite Semitopology Core
Point universe plus a generating basis of open sets, and the open/closed set algebra
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from semitop.errors import BadParams, FamilyTruncated
from semitop.topology.pointset import PointSet, canonical_sorted, minimal_elements

logger = logging.getLogger(__name__)

DEFAULT_OPENS_CAP = 1_048_576


@dataclass(frozen=True)
class Point:
    """A point of a semitopology: dense index plus display label."""
    id: int
    label: str

    def __repr__(self) -> str:
        return f"Point({self.id}, '{self.label}')"


@dataclass(frozen=True)
class OpenFamily:
    """
    Enumerated family of all open sets.

    When ``truncated`` is set the enumeration stopped at the cap and
    ``opens`` is only a prefix of the real family; exact callers must use
    :meth:`require_exact`.
    """
    opens: Tuple[PointSet, ...]
    truncated: bool = False

    def require_exact(self) -> "OpenFamily":
        if self.truncated:
            raise FamilyTruncated(
                f"Open family truncated after {len(self.opens)} sets; raise the cap "
                f"(SEMITOP_OPENS_CAP) for an exact answer"
            )
        return self

    def __contains__(self, item: object) -> bool:
        return item in self._members

    @cached_property
    def _members(self) -> frozenset:
        return frozenset(self.opens)

    def __iter__(self) -> Iterator[PointSet]:
        return iter(self.opens)

    def __len__(self) -> int:
        return len(self.opens)


@dataclass(frozen=True)
class SemiTopology:
    """
    A finite semitopology given by a generating basis.

    The open sets are all unions of generators together with the empty set
    and the whole space, which are always adjoined. Generators are
    canonicalised on construction: empty ones are dropped and duplicates
    merged. Instances are immutable; derived data is cached lazily.
    """

    labels: Tuple[str, ...]
    basis: Tuple[PointSet, ...] = field(default=())
    name: str = ""

    def __post_init__(self) -> None:
        n = len(self.labels)
        if len(set(self.labels)) != n:
            raise BadParams(f"Point labels must be unique: {list(self.labels)}")
        for generator in self.basis:
            if generator.n != n:
                raise BadParams(f"Generator {generator} does not live on {n} points")
        cleaned = tuple(canonical_sorted(g for g in self.basis if g))
        object.__setattr__(self, 'basis', cleaned)

    @classmethod
    def from_index_sets(cls, n: int, basis: Iterable[Iterable[int]],
                        labels: Optional[Sequence[str]] = None,
                        name: str = "") -> "SemiTopology":
        """Build from integer point indices; labels default to '0'..'n-1'."""
        if n < 0:
            raise BadParams(f"Point count must be nonnegative, got {n}")
        labels = tuple(labels) if labels is not None else tuple(str(i) for i in range(n))
        if len(labels) != n:
            raise BadParams(f"Expected {n} labels, got {len(labels)}")
        try:
            generators = tuple(PointSet.of(n, g) for g in basis)
        except ValueError as e:
            raise BadParams(str(e)) from e
        return cls(labels=labels, basis=generators, name=name)

    # Points and labels

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def points(self) -> List[Point]:
        return [Point(i, label) for i, label in enumerate(self.labels)]

    @cached_property
    def _index_by_label(self) -> Dict[str, int]:
        return {label: i for i, label in enumerate(self.labels)}

    def index_of(self, label: str) -> int:
        try:
            return self._index_by_label[label]
        except KeyError:
            raise BadParams(
                f"Unknown point label: '{label}'. Known labels: {', '.join(self.labels)}"
            ) from None

    def set_of(self, labels: Iterable[str]) -> PointSet:
        """PointSet from display labels."""
        return PointSet.of(self.n, (self.index_of(label) for label in labels))

    def indices(self, *indices: int) -> PointSet:
        return PointSet.of(self.n, indices)

    def labels_of(self, s: PointSet) -> List[str]:
        return [self.labels[i] for i in s]

    def format_set(self, s: PointSet) -> str:
        return "{" + ", ".join(self.labels_of(s)) + "}"

    @property
    def empty(self) -> PointSet:
        return PointSet.empty(self.n)

    @property
    def full(self) -> PointSet:
        return PointSet.full(self.n)

    @cached_property
    def neighbourhood_generators(self) -> Tuple[PointSet, ...]:
        """
        Generators plus the implicit generator P.

        Every open neighbourhood of a point contains one of these that also
        contains the point, so quantifiers over open neighbourhoods may be
        restricted to this tuple.
        """
        if self.n == 0 or self.full in self.basis:
            return self.basis
        return self.basis + (self.full,)

    @cached_property
    def _generators_at(self) -> Tuple[Tuple[PointSet, ...], ...]:
        return tuple(
            tuple(g for g in self.neighbourhood_generators if p in g)
            for p in range(self.n)
        )

    def generators_at(self, p: int) -> Tuple[PointSet, ...]:
        """Generators (including P) containing point p."""
        return self._generators_at[p]

    # Open/closed algebra

    def complement(self, s: PointSet) -> PointSet:
        return ~s

    def is_open(self, s: PointSet) -> bool:
        """S is open iff each of its points has a generator neighbourhood inside S."""
        return self.interior(s) == s

    def interior(self, s: PointSet) -> PointSet:
        """Union of the generators (including P) contained in S: the greatest open subset."""
        bits = 0
        for g in self.neighbourhood_generators:
            if g <= s:
                bits |= g.bits
        return PointSet(bits, self.n)

    def closure(self, s: PointSet) -> PointSet:
        """Points all of whose generator neighbourhoods meet S."""
        bits = 0
        for p in range(self.n):
            if all(g.meets(s) for g in self._generators_at[p]):
                bits |= 1 << p
        return PointSet(bits, self.n)

    def is_closed(self, s: PointSet) -> bool:
        return self.closure(s) == s

    def is_closed_by_complement(self, s: PointSet) -> bool:
        """Closedness via the complement being open; must agree with is_closed."""
        return self.is_open(~s)

    def is_clopen(self, s: PointSet) -> bool:
        return self.is_open(s) and self.is_closed(s)

    def open_neighbourhoods(self, p: int, family: Optional[OpenFamily] = None) -> List[PointSet]:
        """nbhd(p): every open set containing p (needs an exact family)."""
        family = (family or self.enumerate_opens()).require_exact()
        return [o for o in family if p in o]

    def minimal_open_neighbourhoods(self, p: int) -> List[PointSet]:
        """
        Inclusion-minimal open neighbourhoods of p.

        A minimal open neighbourhood is a single generator, so no enumeration
        is needed. Unlike in a topology there may be several.
        """
        return minimal_elements(self._generators_at[p])

    # Enumeration

    def enumerate_opens(self, cap: Optional[int] = None) -> OpenFamily:
        """
        All distinct unions of generator subfamilies, plus the empty set and P.

        Stops and sets ``truncated`` when more than ``cap`` distinct opens
        would be produced. Results for the default cap are memoised.
        """
        if cap is None:
            return self._default_family
        return self._enumerate(cap)

    @cached_property
    def _default_family(self) -> OpenFamily:
        from semitop.config import get_settings
        return self._enumerate(get_settings().opens_cap)

    def _enumerate(self, cap: int) -> OpenFamily:
        if cap < 1:
            raise BadParams(f"Enumeration cap must be positive, got {cap}")
        seen = {0, (1 << self.n) - 1}
        for g in self.basis:
            additions = {bits | g.bits for bits in seen} - seen
            if len(seen) + len(additions) > cap:
                logger.warning(
                    f"Open enumeration for {self.name or 'semitopology'} hit cap {cap}; "
                    f"family truncated"
                )
                room = max(cap - len(seen), 0)
                seen.update(sorted(additions)[:room])
                return OpenFamily(tuple(canonical_sorted(PointSet(b, self.n) for b in seen)),
                                  truncated=True)
            seen |= additions
        logger.debug(f"Enumerated {len(seen)} opens for {self.name or 'semitopology'}")
        return OpenFamily(tuple(canonical_sorted(PointSet(b, self.n) for b in seen)))

    def closed_sets(self, family: Optional[OpenFamily] = None) -> List[PointSet]:
        """All closed sets, as complements of the exact open family."""
        family = (family or self.enumerate_opens()).require_exact()
        return canonical_sorted(~o for o in family)

    def is_topology(self, family: Optional[OpenFamily] = None) -> bool:
        """Whether the open family is also closed under pairwise intersection."""
        family = (family or self.enumerate_opens()).require_exact()
        return all((a & b) in family for a in family for b in family)

    # Subspaces

    def subspace(self, t: PointSet) -> "SemiTopology":
        """
        Induced semitopology on T.

        Points of T are renumbered densely in index order; generators become
        their traces G ∩ T with empty and duplicate traces merged.
        """
        members = t.indices()
        position = {p: i for i, p in enumerate(members)}
        m = len(members)
        traces = [
            PointSet.of(m, (position[p] for p in g & t))
            for g in self.basis
        ]
        return SemiTopology(
            labels=tuple(self.labels[p] for p in members),
            basis=tuple(traces),
            name=f"{self.name}|{self.format_set(t)}" if self.name else "",
        )

    def lift_from_subspace(self, t: PointSet, s: PointSet) -> PointSet:
        """Map a set of the subspace on T back to this universe."""
        members = t.indices()
        return PointSet.of(self.n, (members[i] for i in s))

    def __repr__(self) -> str:
        return (f"SemiTopology(name='{self.name}', n={self.n}, "
                f"generators={len(self.basis)})")
