"""View descriptors and index arithmetic.

A view descriptor is the runtime-rank quadruple ``(dimension, shape, strides,
offset)`` together with the internal coordinate order used for scalar
indexing.  The size, the shape strides and the "simple" flag (unstrided with
zero offset) are cached on the descriptor; :func:`check_invariants` verifies
that the caches agree with the defining fields.

Offsets and addresses are element indices into a flat buffer.
"""

from __future__ import annotations

import enum
import operator
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from . import checks
from .errors import (
    CoordinateOutOfBounds,
    DomainError,
    IndexOutOfBounds,
    InvariantViolation,
    LengthMismatch,
    NotScalar,
    RankMismatch,
    SizeOverflow,
    ZeroExtent,
)

U64_MAX = 2**64 - 1


class Order(enum.Enum):
    """Coordinate order used for scalar indexing and iteration.

    ``FCMO`` makes the first coordinate the most significant (row-major in
    2-D); ``LCMO`` makes the last coordinate the most significant
    (column-major in 2-D).
    """

    FCMO = "fcmo"
    LCMO = "lcmo"

    @classmethod
    def parse(cls, value: "Order | str") -> "Order":
        if isinstance(value, Order):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise DomainError(f"unknown coordinate order {value!r}") from None


FIRST_MAJOR = Order.FCMO
LAST_MAJOR = Order.LCMO
DEFAULT_ORDER = Order.LCMO


def _as_index_tuple(values: Sequence[int], what: str) -> tuple[int, ...]:
    try:
        return tuple(operator.index(v) for v in values)
    except TypeError:
        raise DomainError(f"{what} must be a sequence of integers, got {values!r}") from None


def _product(values: Sequence[int]) -> int:
    p = 1
    for v in values:
        p *= v
    return p


def shape_strides(shape: Sequence[int], order: Order = DEFAULT_ORDER) -> tuple[int, ...]:
    """Strides an unstrided view of ``shape`` has in ``order``.

    >>> shape_strides((3, 2, 4), Order.LCMO)
    (1, 3, 6)
    >>> shape_strides((3, 2, 4), Order.FCMO)
    (8, 4, 1)
    """
    d = len(shape)
    u = [1] * d
    if order is Order.FCMO:
        for j in range(d - 2, -1, -1):
            u[j] = u[j + 1] * shape[j + 1]
    else:
        for j in range(1, d):
            u[j] = u[j - 1] * shape[j - 1]
    return tuple(u)


@dataclass(frozen=True)
class ViewDescriptor:
    """Immutable runtime-rank view descriptor.

    Build instances with :func:`make_view` or :func:`make_unstrided_view`;
    those validate the arguments and fill the cached fields.
    """

    shape: tuple[int, ...]
    strides: tuple[int, ...]
    offset: int
    order: Order
    size: int
    shape_strides: tuple[int, ...]
    simple: bool

    @property
    def dimension(self) -> int:
        return len(self.shape)

    @property
    def is_scalar(self) -> bool:
        return len(self.shape) == 0

    def __repr__(self) -> str:
        return (
            f"ViewDescriptor(d={self.dimension}, shape={self.shape}, strides={self.strides}, "
            f"offset={self.offset}, order={self.order.name})"
        )


def _publish(view: ViewDescriptor) -> ViewDescriptor:
    if checks.observer is not None:
        checks.observer(view)
    if checks.debug:
        problems = check_invariants(view)
        if problems:
            raise InvariantViolation(f"{view!r}: " + "; ".join(problems))
    return view


def make_view(
    shape: Sequence[int],
    strides: Sequence[int],
    offset: int = 0,
    order: Order | str = DEFAULT_ORDER,
) -> ViewDescriptor:
    """Validate ``(shape, strides, offset)`` and build a descriptor.

    Raises :class:`LengthMismatch` if shape and strides differ in length and
    :class:`ZeroExtent` if any extent is smaller than one.
    """
    shape = _as_index_tuple(shape, "shape")
    strides = _as_index_tuple(strides, "strides")
    offset = operator.index(offset)
    order = Order.parse(order)
    if len(shape) != len(strides):
        raise LengthMismatch(f"shape has {len(shape)} entries but strides has {len(strides)}")
    for j, s in enumerate(shape):
        if s < 1:
            raise ZeroExtent(f"extent of axis {j} is {s}; extents must be >= 1")
        if s > U64_MAX:
            raise SizeOverflow(f"extent of axis {j} exceeds 64 bits")
    for j, t in enumerate(strides):
        if t < 0:
            raise DomainError(f"stride of axis {j} is negative ({t})")
        if t > U64_MAX:
            raise SizeOverflow(f"stride of axis {j} exceeds 64 bits")
    if offset < 0:
        raise DomainError(f"offset is negative ({offset})")
    if offset > U64_MAX:
        raise SizeOverflow("offset exceeds 64 bits")
    size = _product(shape)
    if size > U64_MAX:
        raise SizeOverflow(f"size of shape {shape} exceeds 64 bits")
    u = shape_strides(shape, order)
    view = ViewDescriptor(
        shape=shape,
        strides=strides,
        offset=offset,
        order=order,
        size=size,
        shape_strides=u,
        simple=(strides == u and offset == 0),
    )
    return _publish(view)


def make_unstrided_view(
    shape: Sequence[int],
    offset: int = 0,
    order: Order | str = DEFAULT_ORDER,
    stride_order: Order | str | None = None,
) -> ViewDescriptor:
    """Build a view whose strides equal the shape strides.

    ``stride_order`` selects the order the strides are computed in; it
    defaults to ``order``, the internal order used for indexing.  With the two
    orders different the result is a valid but strided view.
    """
    shape = _as_index_tuple(shape, "shape")
    for j, s in enumerate(shape):
        if s < 1:
            raise ZeroExtent(f"extent of axis {j} is {s}; extents must be >= 1")
    order = Order.parse(order)
    stride_order = order if stride_order is None else Order.parse(stride_order)
    return make_view(shape, shape_strides(shape, stride_order), offset, order)


def scalar_view(offset: int = 0, order: Order | str = DEFAULT_ORDER) -> ViewDescriptor:
    return make_view((), (), offset, order)


def validate_coordinate(view: ViewDescriptor, c: Sequence[int]) -> tuple[int, ...]:
    """Return ``c`` as a tuple after checking rank and (if enabled) bounds."""
    c = _as_index_tuple(c, "coordinate")
    if len(c) != len(view.shape):
        raise RankMismatch(f"coordinate {c} has {len(c)} entries, view has dimension {view.dimension}")
    if checks.args:
        for j, (cj, sj) in enumerate(zip(c, view.shape)):
            if not 0 <= cj < sj:
                raise CoordinateOutOfBounds(f"coordinate {c} out of bounds on axis {j} for shape {view.shape}")
    return c


def address(view: ViewDescriptor, c: Sequence[int]) -> int:
    """Buffer index addressed by coordinate ``c``: offset plus sum of stride*coordinate."""
    c = validate_coordinate(view, c)
    a = view.offset
    for t, cj in zip(view.strides, c):
        a += t * cj
    return a


def address_scalar(view: ViewDescriptor) -> int:
    if view.dimension != 0:
        raise NotScalar(f"view has dimension {view.dimension}")
    return view.offset


def coordinate_to_index(view: ViewDescriptor, c: Sequence[int]) -> int:
    """Scalar index of ``c`` in the view's internal order."""
    c = validate_coordinate(view, c)
    x = 0
    for u, cj in zip(view.shape_strides, c):
        x += u * cj
    return x


def index_to_coordinate(view: ViewDescriptor, x: int) -> tuple[int, ...]:
    """Inverse of :func:`coordinate_to_index`.

    Axes are peeled from the most significant one down, which is the last
    axis for LCMO and the first for FCMO.
    """
    x = operator.index(x)
    if checks.args and not 0 <= x < view.size:
        raise IndexOutOfBounds(f"index {x} out of range for size {view.size}")
    d = view.dimension
    u = view.shape_strides
    c = [0] * d
    axes = range(d - 1, -1, -1) if view.order is Order.LCMO else range(d)
    for j in axes:
        c[j], x = divmod(x, u[j])
    return tuple(c)


def is_unstrided(view: ViewDescriptor) -> bool:
    return view.strides == shape_strides(view.shape, view.order)


def check_invariants(view: ViewDescriptor) -> list[str]:
    """List every inconsistency in ``view``; an empty list means the view is sound."""
    problems = []
    if not isinstance(view.order, Order):
        problems.append(f"unknown coordinate order {view.order!r}")
        return problems
    if len(view.shape) != len(view.strides):
        problems.append("shape and strides differ in length")
    if any(s < 1 for s in view.shape):
        problems.append("zero extent")
    if any(t < 0 for t in view.strides):
        problems.append("negative stride")
    if view.offset < 0:
        problems.append("negative offset")
    if view.size != _product(view.shape):
        problems.append("size != product of shape")
    expected_u = shape_strides(view.shape, view.order)
    if tuple(view.shape_strides) != expected_u:
        problems.append("shape strides inconsistent with shape and order")
    if view.simple != (tuple(view.strides) == expected_u and view.offset == 0):
        problems.append("simplicity flag inconsistent")
    return problems


def coordinates(view: ViewDescriptor) -> Iterator[tuple[int, ...]]:
    """Yield every coordinate in ascending scalar-index order."""
    d = view.dimension
    if d == 0:
        yield ()
        return
    c = [0] * d
    axes = range(d) if view.order is Order.LCMO else range(d - 1, -1, -1)
    while True:
        yield tuple(c)
        for j in axes:
            c[j] += 1
            if c[j] < view.shape[j]:
                break
            c[j] = 0
        else:
            return


def address_range(view: ViewDescriptor) -> tuple[int, int]:
    """Smallest and largest address reached by the view (inclusive)."""
    hi = view.offset + sum(t * (s - 1) for s, t in zip(view.shape, view.strides))
    return view.offset, hi


def address_grid(view: ViewDescriptor) -> np.ndarray:
    """Array ``g`` of shape ``view.shape`` with ``g[c] == address(view, c)``."""
    grid = np.full((), view.offset, dtype=np.int64)
    d = view.dimension
    for j, (s, t) in enumerate(zip(view.shape, view.strides)):
        axis = np.arange(s, dtype=np.int64) * np.int64(t)
        grid = grid + axis.reshape((1,) * j + (s,) + (1,) * (d - j - 1))
    return np.broadcast_to(grid, view.shape)


def index_addresses(view: ViewDescriptor) -> np.ndarray:
    """Addresses of all elements, listed in ascending scalar-index order."""
    order = "C" if view.order is Order.FCMO else "F"
    return np.asarray(address_grid(view)).ravel(order=order)
