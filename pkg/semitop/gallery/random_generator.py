"""
Random Semitopology Generation
Seeded random instances and exhaustive basis sweeps for property checks
"""

import logging
import random
from itertools import combinations
from typing import Iterator, Optional

from semitop.errors import BadParams
from semitop.topology.semitopology import SemiTopology

logger = logging.getLogger(__name__)

MAX_RANDOM_POINTS = 16


def random_semitopology(n: int, k: int, seed: int) -> SemiTopology:
    """
    n points and k generators drawn uniformly from the nonempty subsets.

    Duplicate draws collapse, so the result may have fewer than k
    generators. The same (n, k, seed) always yields the same space.

    Raises:
        BadParams: if n is outside 1..16 or k is negative
    """
    if not 1 <= n <= MAX_RANDOM_POINTS:
        raise BadParams(f"random_semitopology needs 1 <= n <= {MAX_RANDOM_POINTS}, got {n}")
    if k < 0:
        raise BadParams(f"random_semitopology needs k >= 0, got {k}")
    rng = random.Random(seed)
    masks = [rng.randrange(1, 1 << n) for _ in range(k)]
    basis = [[p for p in range(n) if mask >> p & 1] for mask in masks]
    return SemiTopology.from_index_sets(n, basis, name=f"random(n={n},k={k},seed={seed})")


class RandomSemitopologyGenerator:
    """
    Stream of seeded random instances with bounded size.

    Each instance gets its own derived seed so a failing case can be rebuilt
    alone with :func:`random_semitopology`.
    """

    def __init__(self, seed: int = 0, max_points: int = 8, max_generators: int = 10) -> None:
        if not 1 <= max_points <= MAX_RANDOM_POINTS:
            raise BadParams(f"max_points must be in 1..{MAX_RANDOM_POINTS}, got {max_points}")
        if max_generators < 0:
            raise BadParams(f"max_generators must be nonnegative, got {max_generators}")
        self.seed = seed
        self.max_points = max_points
        self.max_generators = max_generators
        self._rng = random.Random(seed)

    def generate(self, count: int) -> Iterator[SemiTopology]:
        logger.debug(f"Generating {count} random semitopologies (seed {self.seed})")
        for _ in range(count):
            n = self._rng.randint(1, self.max_points)
            k = self._rng.randint(0, self.max_generators)
            yield random_semitopology(n, k, self._rng.randrange(1 << 31))


def all_basis_families(n: int, max_generators: Optional[int] = None) -> Iterator[SemiTopology]:
    """
    Every family of distinct nonempty generators on n points.

    With n = 3 this is all 128 subfamilies of the 7 nonempty subsets.
    """
    if not 1 <= n <= 4:
        raise BadParams(f"Exhaustive sweep supports 1 <= n <= 4, got {n}")
    subsets = list(range(1, 1 << n))
    largest = len(subsets) if max_generators is None else min(max_generators, len(subsets))
    for size in range(largest + 1):
        for chosen in combinations(subsets, size):
            basis = [[p for p in range(n) if mask >> p & 1] for mask in chosen]
            yield SemiTopology.from_index_sets(n, basis, name=f"sweep(n={n},{list(chosen)})")
