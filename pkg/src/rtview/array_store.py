"""Owning arrays.

A :class:`Tensor` is a :class:`~rtview.element_access.View` that owns its
buffer and whose descriptor is always simple: unstrided in the tensor's
coordinate order, with offset zero.  The buffer position of an element is
therefore its scalar index.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .element_access import View
from .errors import AllocationFailure, SizeMismatch, ZeroExtent
from .kinds import DEFAULT_KIND, as_kind
from .view_core import (
    DEFAULT_ORDER,
    Order,
    ViewDescriptor,
    _as_index_tuple,
    address_grid,
    index_addresses,
    make_unstrided_view,
    make_view,
)


def _allocate(size: int, kind: np.dtype, fill=None) -> np.ndarray:
    try:
        buf = np.empty(size, dtype=kind)
    except (MemoryError, ValueError) as exc:
        # numpy reports sizes beyond the address space as ValueError
        raise AllocationFailure(f"cannot allocate {size} elements of {kind}") from exc
    if fill is not None:
        buf.fill(fill)
    return buf


class Tensor(View):
    """Owning runtime-rank array.

    >>> t = Tensor((3, 2, 4), fill=1.0)
    >>> t.size, t.shape
    (24, (3, 2, 4))
    """

    def __init__(
        self,
        shape: Sequence[int],
        fill=0,
        *,
        order: Order | str = DEFAULT_ORDER,
        kind=DEFAULT_KIND,
        initialize: bool = True,
    ):
        desc = make_unstrided_view(shape, 0, order)
        kind = as_kind(kind)
        self._desc = desc
        self._data = _allocate(desc.size, kind, fill if initialize else None)
        self._writable = True
        self._generation = 0

    @classmethod
    def _adopt(cls, desc: ViewDescriptor, data: np.ndarray) -> "Tensor":
        t = cls.__new__(cls)
        t._desc = desc
        t._data = data
        t._writable = True
        t._generation = 0
        return t

    def _apply(self, desc: ViewDescriptor) -> None:
        # Transforms that would make the descriptor strided rearrange the
        # elements instead, so the tensor stays simple.
        if not desc.simple:
            data = self._data[index_addresses(desc)]
            desc = make_unstrided_view(desc.shape, 0, desc.order)
            self._data = data
        self._desc = desc
        self._generation += 1

    def resize(self, shape: Sequence[int], fill=0) -> "Tensor":
        """Change the shape, keeping the coordinate-matched block of entries.

        The first ``min(d, d')`` coordinates of old and new entries are
        matched; surplus axes on either side only match at coordinate 0.
        Every other new entry is set to ``fill``.
        """
        new_shape = _as_index_tuple(shape, "shape")
        for j, s in enumerate(new_shape):
            if s < 1:
                raise ZeroExtent(f"extent of axis {j} is {s}; extents must be >= 1")
        new_desc = make_unstrided_view(new_shape, 0, self.order)
        data = _allocate(new_desc.size, self.kind, fill)
        old_desc = self._desc
        k = min(old_desc.dimension, new_desc.dimension)
        common = [min(a, b) for a, b in zip(old_desc.shape[:k], new_desc.shape[:k])]
        src = np.asarray(address_grid(old_desc))[tuple(slice(0, m) for m in common) + (0,) * (old_desc.dimension - k)]
        dst = np.asarray(address_grid(new_desc))[tuple(slice(0, m) for m in common) + (0,) * (new_desc.dimension - k)]
        data[dst] = self._data[src]
        self._data = data
        self._desc = new_desc
        self._generation += 1
        return self


def create(shape: Sequence[int], fill=0, *, order: Order | str = DEFAULT_ORDER, kind=DEFAULT_KIND) -> Tensor:
    """Tensor of ``shape`` with every entry equal to ``fill`` (zero by default)."""
    return Tensor(shape, fill, order=order, kind=kind)


def create_uninitialized(shape: Sequence[int], *, order: Order | str = DEFAULT_ORDER, kind=DEFAULT_KIND) -> Tensor:
    """Tensor whose entries are left unspecified (but are valid values)."""
    return Tensor(shape, order=order, kind=kind, initialize=False)


def vector(n: int, fill=0, *, kind=DEFAULT_KIND, initialize: bool = True) -> Tensor:
    return Tensor((n,), fill, kind=kind, initialize=initialize)


def matrix(rows: int, cols: int, fill=0, *, order: Order | str = DEFAULT_ORDER, kind=DEFAULT_KIND,
           initialize: bool = True) -> Tensor:
    return Tensor((rows, cols), fill, order=order, kind=kind, initialize=initialize)


def from_values(values, shape: Sequence[int] | None = None, *, order: Order | str = DEFAULT_ORDER,
                kind=None) -> Tensor:
    """Tensor holding ``values`` as its flat buffer (scalar-index order)."""
    data = np.array(values, dtype=None if kind is None else as_kind(kind)).ravel()
    as_kind(data.dtype)
    if shape is None:
        shape = (data.shape[0],)
    desc = make_unstrided_view(shape, 0, order)
    if desc.size != data.shape[0]:
        raise SizeMismatch(f"{data.shape[0]} values do not fill shape {desc.shape}")
    return Tensor._adopt(desc, data)


def from_view(view: View, order: Order | str | None = None) -> Tensor:
    """Copy the elements of ``view`` into a new tensor of the same shape.

    The tensor uses ``order`` (default: the view's order); entries match by
    coordinate.
    """
    order = view.order if order is None else Order.parse(order)
    desc = make_unstrided_view(view.shape, 0, order)
    src = view.descriptor
    if src.order is not order:
        src = make_view(src.shape, src.strides, src.offset, order)
    return Tensor._adopt(desc, view.data[index_addresses(src)])


def reshape(tensor: Tensor, shape: Sequence[int]) -> Tensor:
    return tensor.reshape(shape)


def resize(tensor: Tensor, shape: Sequence[int], fill=0) -> Tensor:
    return tensor.resize(shape, fill)


def view_of(tensor: View, readonly: bool = False) -> View:
    """Whole-tensor view sharing the tensor's buffer."""
    return View._wrap(tensor.descriptor, tensor.data, tensor.writable and not readonly)
