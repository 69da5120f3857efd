from hypothesis import strategies as st

from rtview import Order


@st.composite
def layouts(draw, max_rank=4, max_extent=4, max_stride=8, max_offset=8, min_rank=1):
    """(shape, strides, offset, order) with the given bounds."""
    d = draw(st.integers(min_rank, max_rank))
    shape = tuple(draw(st.lists(st.integers(1, max_extent), min_size=d, max_size=d)))
    strides = tuple(draw(st.lists(st.integers(0, max_stride), min_size=d, max_size=d)))
    offset = draw(st.integers(0, max_offset))
    order = draw(st.sampled_from(list(Order)))
    return shape, strides, offset, order


shapes = st.lists(st.integers(1, 4), min_size=1, max_size=4).map(tuple)
orders = st.sampled_from(list(Order))
