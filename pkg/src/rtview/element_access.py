"""Views bound to element buffers: access, cursors and overlap-safe copying.

A :class:`View` pairs an immutable descriptor with a flat numpy buffer.  It
never owns the buffer; :class:`rtview.array_store.Tensor` is the owning
subclass.  Elements are reached by coordinate (``v[1, 0, 2]``), by scalar
index in the view's internal order (``v[13]``) or through a :class:`Cursor`.
"""

from __future__ import annotations

import operator
from typing import Any, Iterator, Sequence

import numpy as np

from . import checks
from . import view_transform as vt
from .errors import (
    DereferenceAtEnd,
    DomainError,
    IndexOutOfBounds,
    KindMismatch,
    ShapeMismatch,
    StaleCursor,
    ViewOutOfBuffer,
    WriteToReadOnly,
    ZeroStrideDestination,
)
from .kinds import as_kind
from .view_core import (
    DEFAULT_ORDER,
    Order,
    ViewDescriptor,
    address,
    address_grid,
    address_range,
    index_addresses,
    index_to_coordinate,
    make_unstrided_view,
    make_view,
)


def _check_fits(desc: ViewDescriptor, data: np.ndarray) -> None:
    _, hi = address_range(desc)
    if hi >= data.shape[0]:
        raise ViewOutOfBuffer(f"{desc!r} reaches address {hi} but the buffer holds {data.shape[0]} elements")


def _index_address(desc: ViewDescriptor, x: int) -> int:
    if checks.args and not 0 <= x < desc.size:
        raise IndexOutOfBounds(f"index {x} out of range for size {desc.size}")
    if desc.strides == desc.shape_strides:
        return desc.offset + x
    return address(desc, index_to_coordinate(desc, x))


class View:
    """A (possibly strided) multi-dimensional view on a flat buffer.

    Parameters
    ----------
    data:
        One-dimensional numpy array (or sequence converted to one).
    shape:
        Extents; defaults to a 1-D view over ``data[offset:]``.
    strides:
        Buffer steps per axis; defaults to the shape strides of
        ``stride_order`` (itself defaulting to ``order``).
    offset:
        Buffer index of the all-zeros coordinate.
    order:
        Internal coordinate order used for scalar indexing and iteration.
    writable:
        ``False`` makes a view on constant data.  Defaults to the buffer's
        writeable flag.
    """

    def __init__(
        self,
        data: Any,
        shape: Sequence[int] | None = None,
        strides: Sequence[int] | None = None,
        offset: int = 0,
        order: Order | str = DEFAULT_ORDER,
        *,
        stride_order: Order | str | None = None,
        writable: bool | None = None,
    ):
        buf = data if isinstance(data, np.ndarray) else np.asarray(data)
        if buf.ndim != 1:
            raise DomainError(f"buffer must be one-dimensional, got shape {buf.shape}")
        as_kind(buf.dtype)
        if shape is None:
            shape = (buf.shape[0] - offset,)
        if strides is None:
            desc = make_unstrided_view(shape, offset, order, stride_order)
        else:
            desc = make_view(shape, strides, offset, order)
        _check_fits(desc, buf)
        self._desc = desc
        self._data = buf
        self._writable = bool(buf.flags.writeable) if writable is None else bool(writable)
        if self._writable and not buf.flags.writeable:
            raise WriteToReadOnly("buffer is not writeable")
        self._generation = 0

    @classmethod
    def _wrap(cls, desc: ViewDescriptor, data: np.ndarray, writable: bool) -> "View":
        _check_fits(desc, data)
        v = View.__new__(View)
        v._desc = desc
        v._data = data
        v._writable = writable
        v._generation = 0
        return v

    # -- attributes -------------------------------------------------------

    @property
    def descriptor(self) -> ViewDescriptor:
        return self._desc

    @property
    def data(self) -> np.ndarray:
        """The underlying flat buffer (shared, not copied)."""
        return self._data

    @property
    def shape(self) -> tuple[int, ...]:
        return self._desc.shape

    @property
    def strides(self) -> tuple[int, ...]:
        return self._desc.strides

    @property
    def offset(self) -> int:
        return self._desc.offset

    @property
    def order(self) -> Order:
        return self._desc.order

    @property
    def dimension(self) -> int:
        return self._desc.dimension

    @property
    def size(self) -> int:
        return self._desc.size

    @property
    def simple(self) -> bool:
        return self._desc.simple

    @property
    def kind(self) -> np.dtype:
        return self._data.dtype

    @property
    def writable(self) -> bool:
        return self._writable

    def __repr__(self) -> str:
        access = "" if self._writable else ", read-only"
        return f"{type(self).__name__}(shape={self.shape}, order={self.order.name}, kind={self.kind}{access})"

    # -- element access -------------------------------------------------------

    def _require_writable(self) -> None:
        if not self._writable:
            raise WriteToReadOnly("view refers to constant data")

    def get(self, c: Sequence[int]):
        return self._data[address(self._desc, c)]

    def set(self, c: Sequence[int], value) -> None:
        self._require_writable()
        self._data[address(self._desc, c)] = value

    def get_by_index(self, x: int):
        return self._data[_index_address(self._desc, operator.index(x))]

    def set_by_index(self, x: int, value) -> None:
        self._require_writable()
        self._data[_index_address(self._desc, operator.index(x))] = value

    def __getitem__(self, key):
        if isinstance(key, tuple):
            return self.get(key)
        return self.get_by_index(key)

    def __setitem__(self, key, value) -> None:
        if isinstance(key, tuple):
            self.set(key, value)
        else:
            self.set_by_index(key, value)

    def __iter__(self) -> Iterator:
        return iter(self.cursor())

    def cursor(self, position: int = 0) -> "Cursor":
        return Cursor(self, position)

    def values(self) -> np.ndarray:
        """Copy of all elements in ascending scalar-index order."""
        return self._data[index_addresses(self._desc)]

    def to_numpy(self) -> np.ndarray:
        """Copy as an ndarray ``a`` with ``a[c] == self[c]`` for every coordinate."""
        return self._data[np.asarray(address_grid(self._desc))]

    def const_view(self) -> "View":
        """Read-only view of the same elements."""
        return View._wrap(self._desc, self._data, False)

    def copy(self):
        """Materialize into a new tensor with this view's shape and order."""
        from .array_store import from_view

        return from_view(self)

    def assign(self, src: "View") -> "View":
        """Copy ``src``'s elements into this view, coordinate by coordinate."""
        assign_data(self, src)
        return self

    def rebind(self, src: "View") -> "View":
        rebind(self, src)
        return self

    def as_string(self, style: str = "matrix") -> str:
        from .tensor_io import render

        return render(self, style)

    def __str__(self) -> str:
        return self.as_string()

    # -- producing transforms ----------------------------------------------

    def _derive(self, desc: ViewDescriptor) -> "View":
        return View._wrap(desc, self._data, self._writable)

    def view(self, base: Sequence[int], shape: Sequence[int], order: Order | str | None = None) -> "View":
        """Sub-view starting at ``base`` with extents ``shape``."""
        return self._derive(vt.sub_view(self._desc, base, shape, order))

    def bound_view(self, axis: int, value: int) -> "View":
        return self._derive(vt.bind(self._desc, axis, value))

    def squeezed_view(self) -> "View":
        return self._derive(vt.squeeze(self._desc))

    def permuted_view(self, sigma: Sequence[int]) -> "View":
        return self._derive(vt.permute(self._desc, sigma))

    def transposed_view(self, j: int | None = None, k: int | None = None) -> "View":
        """Swap axes ``j`` and ``k``, or reverse all axes when both are omitted."""
        if j is None and k is None:
            return self._derive(vt.transpose_all(self._desc))
        return self._derive(vt.transpose(self._desc, j, k))

    def shifted_view(self, z: int) -> "View":
        return self._derive(vt.cyclic_shift(self._desc, z))

    def reshaped_view(self, shape: Sequence[int]) -> "View":
        return self._derive(vt.reshape_view(self._desc, shape))

    # -- in-place transforms --------------------------------------------------

    def _apply(self, desc: ViewDescriptor) -> None:
        _check_fits(desc, self._data)
        self._desc = desc
        self._generation += 1

    def narrow(self, base: Sequence[int], shape: Sequence[int], order: Order | str | None = None) -> "View":
        self._apply(vt.sub_view(self._desc, base, shape, order))
        return self

    def bind(self, axis: int, value: int) -> "View":
        self._apply(vt.bind(self._desc, axis, value))
        return self

    def squeeze(self) -> "View":
        self._apply(vt.squeeze(self._desc))
        return self

    def permute(self, sigma: Sequence[int]) -> "View":
        self._apply(vt.permute(self._desc, sigma))
        return self

    def transpose(self, j: int | None = None, k: int | None = None) -> "View":
        if j is None and k is None:
            self._apply(vt.transpose_all(self._desc))
        else:
            self._apply(vt.transpose(self._desc, j, k))
        return self

    def shift(self, z: int) -> "View":
        self._apply(vt.cyclic_shift(self._desc, z))
        return self

    def reshape(self, shape: Sequence[int]) -> "View":
        self._apply(vt.reshape_view(self._desc, shape))
        return self

    # -- arithmetic -------------------------------------------------------------

    def __neg__(self):
        from .elementwise_ops import negate

        return negate(self)

    def __pos__(self):
        return self.copy()

    def _binary(self, op: str, other, reflected: bool = False):
        from .elementwise_ops import ew_binary

        return ew_binary(op, other, self) if reflected else ew_binary(op, self, other)

    def _inplace(self, op: str, other):
        from .elementwise_ops import ew_inplace

        ew_inplace(op, self, other)
        return self

    def __add__(self, other):
        return self._binary("add", other)

    def __radd__(self, other):
        return self._binary("add", other, reflected=True)

    def __sub__(self, other):
        return self._binary("sub", other)

    def __rsub__(self, other):
        return self._binary("sub", other, reflected=True)

    def __mul__(self, other):
        return self._binary("mul", other)

    def __rmul__(self, other):
        return self._binary("mul", other, reflected=True)

    def __truediv__(self, other):
        return self._binary("div", other)

    def __rtruediv__(self, other):
        return self._binary("div", other, reflected=True)

    def __iadd__(self, other):
        return self._inplace("add", other)

    def __isub__(self, other):
        return self._inplace("sub", other)

    def __imul__(self, other):
        return self._inplace("mul", other)

    def __itruediv__(self, other):
        return self._inplace("div", other)


class Cursor:
    """Random-access position over a view, in the view's scalar-index order.

    ``position == view.size`` is the one-past-the-end state.  ``cursor[k]``
    reads the element ``k`` steps past the current position.  Reshaping or
    resizing the view after the cursor was made invalidates the cursor; with
    debug checks on, further use raises :class:`StaleCursor`.
    """

    __slots__ = ("_view", "_pos", "_generation")

    def __init__(self, view: View, position: int = 0):
        self._view = view
        self._generation = view._generation
        self._pos = 0
        self.seek(position)

    def _desc(self) -> ViewDescriptor:
        if checks.debug and self._view._generation != self._generation:
            raise StaleCursor("the view changed after this cursor was created")
        return self._view._desc

    @property
    def view(self) -> View:
        return self._view

    @property
    def position(self) -> int:
        return self._pos

    @property
    def at_end(self) -> bool:
        return self._pos == self._desc().size

    @property
    def coordinate(self) -> tuple[int, ...]:
        return index_to_coordinate(self._desc(), self._pos)

    def seek(self, k: int) -> "Cursor":
        k = operator.index(k)
        if not 0 <= k <= self._desc().size:
            raise IndexOutOfBounds(f"cursor position {k} outside [0, {self._desc().size}]")
        self._pos = k
        return self

    def advance(self, n: int = 1) -> "Cursor":
        return self.seek(self._pos + n)

    def retreat(self, n: int = 1) -> "Cursor":
        return self.seek(self._pos - n)

    def _address(self, k: int) -> int:
        desc = self._desc()
        if not 0 <= k < desc.size:
            if k == desc.size:
                raise DereferenceAtEnd("cursor is at the end of the view")
            raise IndexOutOfBounds(f"cursor offset {k} outside [0, {desc.size})")
        return _index_address(desc, k)

    def read(self):
        return self._view._data[self._address(self._pos)]

    def write(self, value) -> None:
        self._view._require_writable()
        self._view._data[self._address(self._pos)] = value

    def __getitem__(self, k: int):
        return self._view._data[self._address(self._pos + operator.index(k))]

    def __setitem__(self, k: int, value) -> None:
        self._view._require_writable()
        self._view._data[self._address(self._pos + operator.index(k))] = value

    def __add__(self, n: int) -> "Cursor":
        return Cursor(self._view, self._pos + n)

    def __sub__(self, other):
        if isinstance(other, Cursor):
            return self._pos - other._pos
        return Cursor(self._view, self._pos - other)

    def __eq__(self, other) -> bool:
        return isinstance(other, Cursor) and other._view is self._view and other._pos == self._pos

    def __lt__(self, other: "Cursor") -> bool:
        return self._pos < other._pos

    def __hash__(self):
        return hash((id(self._view), self._pos))

    def __iter__(self) -> "Cursor":
        return self

    def __next__(self):
        if self._pos >= self._desc().size:
            raise StopIteration
        value = self.read()
        self._pos += 1
        return value


def overlaps(a: View, b: View, exact: bool = False) -> bool:
    """Whether two views may address a common element.

    By default this compares the address intervals of the two views, which
    can report an overlap for interleaved but disjoint views.  ``exact=True``
    intersects the address sets instead.  Views on distinct buffers that
    share memory through numpy slicing are always reported as overlapping.
    """
    if a._data is not b._data:
        return bool(np.may_share_memory(a._data, b._data))
    lo_a, hi_a = address_range(a._desc)
    lo_b, hi_b = address_range(b._desc)
    if hi_a < lo_b or hi_b < lo_a:
        return False
    if not exact:
        return True
    return bool(np.intersect1d(index_addresses(a._desc), index_addresses(b._desc)).size)


def has_aliasing_stride(desc: ViewDescriptor) -> bool:
    """True if some axis of extent > 1 has stride 0."""
    return any(t == 0 and s > 1 for s, t in zip(desc.shape, desc.strides))


def check_destination(dst: View) -> None:
    dst._require_writable()
    if has_aliasing_stride(dst._desc):
        raise ZeroStrideDestination(f"{dst._desc!r} maps several coordinates to one element")


def assign_data(dst: View, src: View) -> None:
    """Copy ``src`` into ``dst`` coordinate by coordinate.

    Internal orders of the two views do not matter.  If the views overlap,
    the source elements are gathered into a temporary first, so the result is
    always that of copying the old ``src`` contents.
    """
    check_destination(dst)
    if dst.shape != src.shape:
        raise ShapeMismatch(f"cannot assign shape {src.shape} to shape {dst.shape}")
    if dst.kind != src.kind:
        raise KindMismatch(f"cannot assign {src.kind} elements to a {dst.kind} view")
    same_layout = dst.order is src.order or dst.dimension <= 1
    if dst.simple and src.simple and same_layout and not overlaps(dst, src):
        n = dst.size
        dst._data[:n] = src._data[:n]
        return
    # Fancy indexing gathers into a fresh array: this is the temporary copy
    # that makes overlapping source and destination safe.
    temp = src._data[np.asarray(address_grid(src._desc))]
    dst._data[np.asarray(address_grid(dst._desc))] = temp


def rebind(dst: View, src: View) -> None:
    """Make the read-only handle ``dst`` refer to ``src``'s elements.

    Only the descriptor and buffer reference are replaced; no element is
    copied.
    """
    if dst._writable:
        raise TypeError("rebind needs a read-only view; use assign_data to copy elements")
    if dst is src:
        return
    dst._desc = src._desc
    dst._data = src._data
    dst._generation += 1


def cursor(view: View, position: int = 0) -> Cursor:
    return Cursor(view, position)
