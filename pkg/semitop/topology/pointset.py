"""
PointSet: subsets of a finite point universe
Bit-parallel representation over dense indices 0..n-1
"""

from dataclasses import dataclass
from typing import Iterable, Iterator, List, Tuple


@dataclass(frozen=True)
class PointSet:
    """
    Immutable subset of the universe {0, ..., n-1}.

    Membership is stored as an integer bitmask: bit i set means point i is
    a member. All set algebra in the library goes through this type.
    """

    bits: int
    n: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"Universe size must be nonnegative, got {self.n}")
        if self.bits < 0 or self.bits >> self.n:
            raise ValueError(f"Bits {self.bits:#x} exceed universe of size {self.n}")

    @classmethod
    def empty(cls, n: int) -> "PointSet":
        return cls(0, n)

    @classmethod
    def full(cls, n: int) -> "PointSet":
        return cls((1 << n) - 1, n)

    @classmethod
    def of(cls, n: int, indices: Iterable[int]) -> "PointSet":
        """Build from point indices; raises ValueError on out-of-range members."""
        bits = 0
        for i in indices:
            if not 0 <= i < n:
                raise ValueError(f"Point index {i} outside universe of size {n}")
            bits |= 1 << i
        return cls(bits, n)

    @classmethod
    def singleton(cls, n: int, index: int) -> "PointSet":
        return cls.of(n, [index])

    def _check(self, other: "PointSet") -> None:
        if self.n != other.n:
            raise ValueError(f"Universe mismatch: {self.n} vs {other.n}")

    # Set algebra

    def __or__(self, other: "PointSet") -> "PointSet":
        self._check(other)
        return PointSet(self.bits | other.bits, self.n)

    def __and__(self, other: "PointSet") -> "PointSet":
        self._check(other)
        return PointSet(self.bits & other.bits, self.n)

    def __sub__(self, other: "PointSet") -> "PointSet":
        self._check(other)
        return PointSet(self.bits & ~other.bits, self.n)

    def __invert__(self) -> "PointSet":
        return PointSet(~self.bits & ((1 << self.n) - 1), self.n)

    def __le__(self, other: "PointSet") -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    def __lt__(self, other: "PointSet") -> bool:
        return self <= other and self.bits != other.bits

    def __ge__(self, other: "PointSet") -> bool:
        return other <= self

    def __gt__(self, other: "PointSet") -> bool:
        return other < self

    def meets(self, other: "PointSet") -> bool:
        """True when the two sets have nonempty intersection."""
        self._check(other)
        return self.bits & other.bits != 0

    def __contains__(self, index: object) -> bool:
        return isinstance(index, int) and 0 <= index < self.n and bool(self.bits >> index & 1)

    def __iter__(self) -> Iterator[int]:
        bits = self.bits
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low

    def __len__(self) -> int:
        return bin(self.bits).count("1")

    def __bool__(self) -> bool:
        return self.bits != 0

    def is_empty(self) -> bool:
        return self.bits == 0

    def is_full(self) -> bool:
        return self.bits == (1 << self.n) - 1

    def indices(self) -> List[int]:
        return list(self)

    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        """Canonical order: cardinality first, then lexicographic on indices."""
        return (len(self), tuple(self))

    def __repr__(self) -> str:
        return f"PointSet({{{', '.join(str(i) for i in self)}}}, n={self.n})"


def canonical_sorted(sets: Iterable[PointSet]) -> List[PointSet]:
    """Deduplicate and sort by the canonical set order."""
    return sorted(set(sets), key=PointSet.sort_key)


def minimal_elements(sets: Iterable[PointSet]) -> List[PointSet]:
    """The inclusion-minimal members of a family, in canonical order."""
    candidates = canonical_sorted(sets)
    minimal: List[PointSet] = []
    # canonical order puts smaller sets first, so a later set can never be
    # strictly below an earlier one
    for candidate in candidates:
        if not any(kept <= candidate for kept in minimal):
            minimal.append(candidate)
    return minimal


def maximal_elements(sets: Iterable[PointSet]) -> List[PointSet]:
    """The inclusion-maximal members of a family, in canonical order."""
    candidates = canonical_sorted(sets)
    return [
        c for c in candidates
        if not any(c < other for other in candidates)
    ]
