"""Runtime switches for debug checks and argument checks.

Two independent switches exist:

``debug``
    Re-validate cached descriptor attributes after every constructor and
    transform, and detect stale cursors.
``args``
    Bounds-check coordinates and scalar indices on the element access paths.

Both default to ``__debug__`` (``True`` unless Python runs with ``-O``).  The
environment variables ``RTVIEW_NO_DEBUG`` and ``RTVIEW_NO_ARG_TEST`` force
the corresponding switch off when set to a non-empty value other than ``0``.
Structural argument errors (mismatched shapes, bad permutations, ...) are
always reported regardless of these switches.
"""

from __future__ import annotations

import contextlib
import os
from typing import Callable, Iterator, Optional


def _env_off(name: str) -> bool:
    return os.environ.get(name, "") not in ("", "0")


debug: bool = __debug__ and not _env_off("RTVIEW_NO_DEBUG")
args: bool = __debug__ and not _env_off("RTVIEW_NO_ARG_TEST")

# Called with every freshly built descriptor; used by test harnesses.
observer: Optional[Callable[[object], None]] = None


def configure(*, debug: Optional[bool] = None, args: Optional[bool] = None) -> None:
    g = globals()
    if debug is not None:
        g["debug"] = bool(debug)
    if args is not None:
        g["args"] = bool(args)


@contextlib.contextmanager
def overridden(*, debug: Optional[bool] = None, args: Optional[bool] = None) -> Iterator[None]:
    """Temporarily change the switches, restoring them on exit."""
    g = globals()
    saved = (g["debug"], g["args"])
    configure(debug=debug, args=args)
    try:
        yield
    finally:
        g["debug"], g["args"] = saved
