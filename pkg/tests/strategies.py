"""
Hypothesis strategies shared by the property tests
"""

from hypothesis import strategies as st

from semitop.topology.pointset import PointSet
from semitop.topology.semitopology import SemiTopology


@st.composite
def semitopologies(draw, min_points: int = 1, max_points: int = 6, max_generators: int = 8):
    n = draw(st.integers(min_value=min_points, max_value=max_points))
    masks = draw(st.lists(st.integers(min_value=1, max_value=(1 << n) - 1),
                          max_size=max_generators))
    basis = [[p for p in range(n) if mask >> p & 1] for mask in masks]
    return SemiTopology.from_index_sets(n, basis)


@st.composite
def spaces_with_set(draw, max_points: int = 6, max_generators: int = 8):
    space = draw(semitopologies(max_points=max_points, max_generators=max_generators))
    bits = draw(st.integers(min_value=0, max_value=(1 << space.n) - 1))
    return space, PointSet(bits, space.n)
