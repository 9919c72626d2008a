"""Shared hypothesis strategies."""

from hypothesis import strategies as st

from filterpaths.model import Arrangement, Kind, Restriction, WeightRule, validate


@st.composite
def arrangements(draw, max_restrictions: int = 3):
    """Random valid arrangement: one-way columns with gaps >= 2."""
    count = draw(st.integers(0, max_restrictions))
    axis = draw(st.integers(-8, 4))
    rs = []
    for _ in range(count):
        kind = draw(st.sampled_from(list(Kind)))
        rs.append(Restriction(kind, axis))
        axis += draw(st.integers(2, 5))
    semantics = draw(st.sampled_from(list(WeightRule)))
    return validate(Arrangement(tuple(rs), semantics))
