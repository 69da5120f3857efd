"""Runtime-rank multi-dimensional views and arrays."""

from . import checks
from .array_store import (
    Tensor,
    create,
    create_uninitialized,
    from_values,
    from_view,
    matrix,
    reshape,
    resize,
    vector,
    view_of,
)
from .element_access import Cursor, View, assign_data, cursor, overlaps, rebind
from .elementwise_ops import decrement_all, ew_binary, ew_inplace, increment_all, negate
from .errors import *  # noqa: F401,F403
from .tensor_io import load, read_tensor, render, render_matrix, render_table, save, write_tensor
from .view_core import (
    FIRST_MAJOR,
    LAST_MAJOR,
    Order,
    ViewDescriptor,
    address,
    address_scalar,
    check_invariants,
    coordinate_to_index,
    index_to_coordinate,
    is_unstrided,
    make_unstrided_view,
    make_view,
    shape_strides,
)
from .view_transform import (
    bind,
    cyclic_shift,
    permute,
    reshape_view,
    squeeze,
    sub_view,
    transpose,
    transpose_all,
)

__version__ = "0.1.0"
