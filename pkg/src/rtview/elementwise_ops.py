"""Elementwise arithmetic on views and tensors.

Binary operations pair elements by coordinate, so operands may differ in
strides and internal order as long as their shapes agree.  A plain number
on either side is broadcast to every coordinate.  Operands must share one
element kind; scalars are converted to it.  Integer division truncates
toward zero and raises :class:`DivisionByZero` on a zero divisor; floating
point follows IEEE 754.
"""

from __future__ import annotations

import numbers

import numpy as np

from .array_store import Tensor, from_view
from .element_access import View, check_destination
from .errors import DivisionByZero, DomainError, KindMismatch, ShapeMismatch, ValueOutOfRange
from .view_core import address_grid, make_unstrided_view

OPS = ("add", "sub", "mul", "div")


def _int_div(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    b = np.broadcast_to(b, np.shape(a)) if np.ndim(b) == 0 else b
    if np.any(b == 0):
        raise DivisionByZero("integer division by zero")
    q = np.floor_divide(a, b)
    if np.issubdtype(np.result_type(a, b), np.signedinteger):
        r = a - q * b
        q = q + ((r != 0) & ((a < 0) != (b < 0))).astype(q.dtype)
    return q


def _apply(op: str, a, b, kind: np.dtype):
    with np.errstate(all="ignore"):
        if op == "add":
            return np.add(a, b, dtype=kind)
        if op == "sub":
            return np.subtract(a, b, dtype=kind)
        if op == "mul":
            return np.multiply(a, b, dtype=kind)
        if op == "div":
            if np.issubdtype(kind, np.integer):
                return _int_div(np.asarray(a, dtype=kind), np.asarray(b, dtype=kind)).astype(kind)
            return np.divide(a, b, dtype=kind)
    raise DomainError(f"unknown operation {op!r}; expected one of {OPS}")


def _scalar(value, kind: np.dtype):
    if isinstance(value, (bool, np.bool_)) or not isinstance(value, numbers.Number):
        raise KindMismatch(f"cannot combine {type(value).__name__} with a {kind} view")
    if np.issubdtype(kind, np.integer) and not isinstance(value, numbers.Integral):
        raise KindMismatch(f"non-integral scalar {value!r} with a {kind} view")
    try:
        return np.array(value, dtype=kind)
    except OverflowError:
        raise ValueOutOfRange(f"scalar {value!r} does not fit {kind}") from None


def _gather(v: View) -> np.ndarray:
    """Elements of ``v`` as an ndarray indexed by coordinate."""
    return v.data[np.asarray(address_grid(v.descriptor))]


def _operands(a, b):
    va = isinstance(a, View)
    vb = isinstance(b, View)
    if not (va or vb):
        raise DomainError("at least one operand must be a view")
    if va and vb:
        if a.shape != b.shape:
            raise ShapeMismatch(f"shapes {a.shape} and {b.shape} differ")
        if a.kind != b.kind:
            raise KindMismatch(f"element kinds {a.kind} and {b.kind} differ")
        return a, _gather(a), _gather(b)
    first = a if va else b
    if va:
        return first, _gather(a), _scalar(b, a.kind)
    return first, _scalar(a, b.kind), _gather(b)


def ew_binary(op: str, a, b) -> Tensor:
    """``result[c] = a[c] op b[c]`` for every coordinate ``c``.

    The result has the first view operand's shape, order and kind.
    """
    first, x, y = _operands(a, b)
    values = np.asarray(_apply(op, x, y, first.kind))
    desc = make_unstrided_view(first.shape, 0, first.order)
    order = "C" if desc.order.name == "FCMO" else "F"
    return Tensor._adopt(desc, np.ascontiguousarray(values.ravel(order=order)))


def ew_inplace(op: str, dst: View, rhs) -> View:
    """``dst[c] = dst[c] op rhs[c]`` for every coordinate ``c``.

    A view ``rhs`` is read completely before ``dst`` is written, so aliasing
    between the two never changes the result.
    """
    if not isinstance(dst, View):
        raise DomainError("in-place destination must be a view")
    check_destination(dst)
    _, x, y = _operands(dst, rhs)
    dst.data[np.asarray(address_grid(dst.descriptor))] = _apply(op, x, y, dst.kind)
    return dst


def negate(a: View) -> Tensor:
    out = from_view(a)
    with np.errstate(all="ignore"):
        np.negative(out.data, out=out.data)
    return out


def increment_all(dst: View) -> View:
    return ew_inplace("add", dst, 1)


def decrement_all(dst: View) -> View:
    return ew_inplace("sub", dst, 1)


def add(a, b) -> Tensor:
    return ew_binary("add", a, b)


def sub(a, b) -> Tensor:
    return ew_binary("sub", a, b)


def mul(a, b) -> Tensor:
    return ew_binary("mul", a, b)


def div(a, b) -> Tensor:
    return ew_binary("div", a, b)
