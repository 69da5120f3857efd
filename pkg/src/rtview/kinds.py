"""Supported element kinds and their short names."""

from __future__ import annotations

import numpy as np

from .errors import KindMismatch

# name -> dtype; the names double as the CLI's --kind values.
KINDS = {
    "f32": np.dtype(np.float32),
    "f64": np.dtype(np.float64),
    "i32": np.dtype(np.int32),
    "i64": np.dtype(np.int64),
    "u8": np.dtype(np.uint8),
}
DEFAULT_KIND = KINDS["f64"]


def as_kind(kind) -> np.dtype:
    """Normalize ``kind`` (short name, numpy dtype or scalar type) to a dtype."""
    if isinstance(kind, str) and kind in KINDS:
        return KINDS[kind]
    try:
        dt = np.dtype(kind)
    except TypeError:
        raise KindMismatch(f"unknown element kind {kind!r}") from None
    if dt.newbyteorder("=") not in KINDS.values():
        raise KindMismatch(f"unsupported element kind {dt}")
    return dt.newbyteorder("=")


def kind_name(kind) -> str:
    dt = as_kind(kind)
    for name, candidate in KINDS.items():
        if candidate == dt:
            return name
    raise KindMismatch(f"unsupported element kind {dt}")  # pragma: no cover
