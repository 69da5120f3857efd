"""Text rendering of views and the MTF1 binary tensor format.

Text styles
-----------
``table``
    One line per element in ascending scalar-index order:
    ``c0,c1,...  value``.
``matrix`` (default)
    Rank 1 is a single space-separated row.  Rank 2 prints row ``j`` /
    column ``k`` for coordinate ``(j, k)``.  Higher ranks print, for each
    combination of the trailing coordinates (in the view's scalar-index
    order), a header ``(:, :, c2, ..., c{d-1})`` followed by that 2-D slice;
    blocks are separated by one empty line.

Integers are printed exactly, floating point values in their shortest
round-trip form.

MTF1 layout (all fields little-endian)
--------------------------------------
========  =====  ==========================================
offset    size   field
========  =====  ==========================================
0         4      magic ``b"MTF1"``
4         1      version (1)
5         1      element code: 1 f32, 2 f64, 3 i32, 4 i64, 5 u8
6         1      order code: 0 LCMO, 1 FCMO
7         1      reserved (0)
8         4      dimension ``d`` (unsigned)
12        8*d    extents (unsigned 64-bit)
12+8d     ...    buffer elements in stored (scalar-index) order
========  =====  ==========================================
"""

from __future__ import annotations

import io
import os
import struct
from typing import BinaryIO

import numpy as np

from .array_store import Tensor, from_view
from .element_access import View
from .errors import (
    BadMagic,
    DomainError,
    FormatError,
    TrailingGarbage,
    TruncatedPayload,
    UnknownElementCode,
    UnknownOrderCode,
    UnsupportedVersion,
)
from .kinds import KINDS
from .view_core import U64_MAX, Order, coordinates, make_unstrided_view

MAGIC = b"MTF1"
VERSION = 1
ELEMENT_CODES = {1: KINDS["f32"], 2: KINDS["f64"], 3: KINDS["i32"], 4: KINDS["i64"], 5: KINDS["u8"]}
ORDER_CODES = {0: Order.LCMO, 1: Order.FCMO}
_HEADER = struct.Struct("<4sBBBBI")

TABLE_STYLE = "table"
MATRIX_STYLE = "matrix"


def format_value(value) -> str:
    if isinstance(value, (np.integer, int)):
        return str(int(value))
    if isinstance(value, np.floating):
        return str(value)
    return repr(float(value))


def render_table(view: View) -> str:
    grid = view.to_numpy()
    lines = []
    for c in coordinates(view.descriptor):
        lines.append(",".join(str(j) for j in c) + "  " + format_value(grid[c]) + "\n")
    return "".join(lines)


def _rows(grid: np.ndarray) -> list[str]:
    return [" ".join(format_value(x) for x in row) + "\n" for row in grid]


def render_matrix(view: View) -> str:
    grid = view.to_numpy()
    d = grid.ndim
    if d == 0:
        return format_value(grid[()]) + "\n"
    if d == 1:
        return "".join(_rows(grid[np.newaxis, :]))
    if d == 2:
        return "".join(_rows(grid))
    trailing = make_unstrided_view(grid.shape[2:], 0, view.order)
    blocks = []
    for c in coordinates(trailing):
        header = "(:, :, " + ", ".join(str(j) for j in c) + ")\n"
        blocks.append(header + "".join(_rows(grid[(slice(None), slice(None)) + c])))
    return "\n".join(blocks)


def render(view: View, style: str = MATRIX_STYLE) -> str:
    if style == MATRIX_STYLE:
        return render_matrix(view)
    if style == TABLE_STYLE:
        return render_table(view)
    raise DomainError(f"unknown style {style!r}; expected 'matrix' or 'table'")


def _element_code(kind: np.dtype) -> int:
    for code, candidate in ELEMENT_CODES.items():
        if candidate == kind:
            return code
    raise UnknownElementCode(f"no element code for {kind}")


def write_tensor(stream: BinaryIO, tensor: View) -> None:
    """Write ``tensor`` to ``stream``; strided views are materialized first."""
    if not (isinstance(tensor, Tensor) and tensor.simple):
        tensor = from_view(tensor)
    order_code = 0 if tensor.order is Order.LCMO else 1
    stream.write(_HEADER.pack(MAGIC, VERSION, _element_code(tensor.kind), order_code, 0, tensor.dimension))
    stream.write(struct.pack(f"<{tensor.dimension}Q", *tensor.shape))
    stream.write(tensor.data[: tensor.size].astype(tensor.kind.newbyteorder("<"), copy=False).tobytes())


def _read_exact(stream: BinaryIO, n: int, what: str) -> bytes:
    chunks = []
    remaining = n
    while remaining:
        chunk = stream.read(min(remaining, 1 << 24))
        if not chunk:
            raise TruncatedPayload(f"stream ended {remaining} bytes early while reading {what}")
        chunks.append(chunk)
        remaining -= len(chunk)
    return b"".join(chunks)


def read_tensor(stream: BinaryIO) -> Tensor:
    """Read one tensor; the stream must end right after its payload."""
    magic, version, element_code, order_code, _reserved, d = _HEADER.unpack(
        _read_exact(stream, _HEADER.size, "header")
    )
    if magic != MAGIC:
        raise BadMagic(f"bad magic {magic!r}")
    if version != VERSION:
        raise UnsupportedVersion(f"unsupported version {version}")
    if element_code not in ELEMENT_CODES:
        raise UnknownElementCode(f"unknown element code {element_code}")
    if order_code not in ORDER_CODES:
        raise UnknownOrderCode(f"unknown order code {order_code}")
    shape = struct.unpack(f"<{d}Q", _read_exact(stream, 8 * d, "shape"))
    size = 1
    for s in shape:
        if s == 0:
            raise FormatError("zero extent in header")
        size *= s
    if size > U64_MAX:
        raise FormatError(f"size of shape {shape} exceeds 64 bits")
    kind = ELEMENT_CODES[element_code]
    payload = _read_exact(stream, size * kind.itemsize, "payload")
    if stream.read(1):
        raise TrailingGarbage("unexpected bytes after the payload")
    data = np.frombuffer(payload, dtype=kind.newbyteorder("<")).astype(kind)
    desc = make_unstrided_view(shape, 0, ORDER_CODES[order_code])
    return Tensor._adopt(desc, data)


def encode(tensor: View) -> bytes:
    buf = io.BytesIO()
    write_tensor(buf, tensor)
    return buf.getvalue()


def decode(blob: bytes) -> Tensor:
    return read_tensor(io.BytesIO(blob))


def save(path: str | os.PathLike, tensor: View) -> None:
    with open(path, "wb") as f:
        write_tensor(f, tensor)


def load(path: str | os.PathLike) -> Tensor:
    with open(path, "rb") as f:
        return read_tensor(f)
