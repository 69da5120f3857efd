"""Pure transforms producing new view descriptors.

None of these functions touch element data.  All of them return a fresh
:class:`~rtview.view_core.ViewDescriptor`; the input is never modified.
"""

from __future__ import annotations

import operator
from typing import Sequence

from .errors import (
    AxisOutOfRange,
    NotAPermutation,
    NotUnstrided,
    RankMismatch,
    SizeMismatch,
    SubViewOutOfBounds,
    ValueOutOfRange,
)
from .view_core import (
    Order,
    ViewDescriptor,
    _as_index_tuple,
    _product,
    address,
    is_unstrided,
    make_unstrided_view,
    make_view,
)


def _require_rank(view: ViewDescriptor, what: str) -> None:
    if view.dimension == 0:
        raise RankMismatch(f"{what} is undefined for a scalar view")


def _check_axis(view: ViewDescriptor, axis: int) -> int:
    axis = operator.index(axis)
    if not 0 <= axis < view.dimension:
        raise AxisOutOfRange(f"axis {axis} out of range for dimension {view.dimension}")
    return axis


def sub_view(
    view: ViewDescriptor,
    base: Sequence[int],
    shape: Sequence[int],
    order: Order | str | None = None,
) -> ViewDescriptor:
    """Window of ``view`` starting at coordinate ``base`` with extents ``shape``.

    The new offset is the address of ``base`` in ``view``.  ``order`` sets the
    internal coordinate order of the result and defaults to the parent's.
    """
    _require_rank(view, "sub_view")
    base = _as_index_tuple(base, "base")
    shape = _as_index_tuple(shape, "shape")
    if len(base) != view.dimension or len(shape) != view.dimension:
        raise RankMismatch(
            f"base {base} and shape {shape} must both have {view.dimension} entries"
        )
    for j, (b, s, bound) in enumerate(zip(base, shape, view.shape)):
        if b < 0 or s < 1 or b + s > bound:
            raise SubViewOutOfBounds(
                f"axis {j}: base {b} + extent {s} exceeds parent extent {bound}"
            )
    new_order = view.order if order is None else Order.parse(order)
    return make_view(shape, view.strides, address(view, base), new_order)


def bind(view: ViewDescriptor, axis: int, value: int) -> ViewDescriptor:
    """Fix coordinate ``axis`` to ``value``; the result has one axis less."""
    _require_rank(view, "bind")
    axis = _check_axis(view, axis)
    value = operator.index(value)
    if not 0 <= value < view.shape[axis]:
        raise ValueOutOfRange(f"value {value} out of range for axis {axis} of extent {view.shape[axis]}")
    shape = view.shape[:axis] + view.shape[axis + 1:]
    strides = view.strides[:axis] + view.strides[axis + 1:]
    return make_view(shape, strides, view.offset + view.strides[axis] * value, view.order)


def squeeze(view: ViewDescriptor) -> ViewDescriptor:
    """Drop every axis of extent one (binding it to zero leaves the offset alone)."""
    keep = [j for j, s in enumerate(view.shape) if s != 1]
    return make_view(
        [view.shape[j] for j in keep],
        [view.strides[j] for j in keep],
        view.offset,
        view.order,
    )


def _check_permutation(sigma: Sequence[int], d: int) -> tuple[int, ...]:
    sigma = _as_index_tuple(sigma, "permutation")
    if len(sigma) != d:
        raise RankMismatch(f"permutation {sigma} has {len(sigma)} entries, view has dimension {d}")
    if sorted(sigma) != list(range(d)):
        raise NotAPermutation(f"{sigma} is not a permutation of 0..{d - 1}")
    return sigma


def permute(view: ViewDescriptor, sigma: Sequence[int]) -> ViewDescriptor:
    """Axis ``j`` of the result is axis ``sigma[j]`` of ``view``."""
    _require_rank(view, "permute")
    sigma = _check_permutation(sigma, view.dimension)
    return make_view(
        [view.shape[k] for k in sigma],
        [view.strides[k] for k in sigma],
        view.offset,
        view.order,
    )


def transpose(view: ViewDescriptor, j: int, k: int) -> ViewDescriptor:
    _require_rank(view, "transpose")
    j = _check_axis(view, j)
    k = _check_axis(view, k)
    sigma = list(range(view.dimension))
    sigma[j], sigma[k] = k, j
    return permute(view, sigma)


def transpose_all(view: ViewDescriptor) -> ViewDescriptor:
    """Reverse the order of the axes."""
    _require_rank(view, "transpose")
    return permute(view, range(view.dimension - 1, -1, -1))


def cyclic_shift(view: ViewDescriptor, z: int) -> ViewDescriptor:
    """Rotate the axes by ``z`` positions.

    Axis ``j`` of the result is axis ``(j - z) mod d`` of ``view``, so a
    shift by 1 of shape ``(2, 3, 7)`` gives ``(7, 2, 3)``.  Any integer ``z``
    is accepted.
    """
    _require_rank(view, "cyclic_shift")
    d = view.dimension
    z = operator.index(z) % d
    return permute(view, [(j - z) % d for j in range(d)])


def reshape_view(view: ViewDescriptor, shape: Sequence[int]) -> ViewDescriptor:
    """Reinterpret an unstrided view with a new shape of equal size.

    The element at each scalar index is preserved; order and offset are kept.
    Strided views are rejected with :class:`NotUnstrided`.
    """
    shape = _as_index_tuple(shape, "shape")
    if not is_unstrided(view):
        raise NotUnstrided(f"cannot reshape strided view {view!r}")
    new_size = _product(shape)
    if new_size != view.size or any(s < 1 for s in shape):
        raise SizeMismatch(f"cannot reshape size {view.size} to shape {shape} (size {new_size})")
    return make_unstrided_view(shape, view.offset, view.order)


def inverse_permutation(sigma: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(sigma)
    for j, k in enumerate(sigma):
        inv[k] = j
    return tuple(inv)
