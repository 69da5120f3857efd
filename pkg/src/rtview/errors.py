"""Exception hierarchy.

Every error raised by the library derives from :class:`ArrayError`.  Two
broad families exist so callers (and the CLI) can react by category:

* :class:`DomainError` -- bad shapes, coordinates, axes, sizes.
* :class:`FormatError` -- malformed tensor files.
"""


class ArrayError(Exception):
    """Base class for all library errors."""


class DomainError(ArrayError, ValueError):
    """A shape, bound or other argument is outside the admissible domain."""


class LengthMismatch(DomainError):
    pass


class ZeroExtent(DomainError):
    pass


class SizeOverflow(DomainError):
    pass


class RankMismatch(DomainError):
    pass


class NotScalar(DomainError):
    pass


class CoordinateOutOfBounds(DomainError, IndexError):
    pass


class IndexOutOfBounds(DomainError, IndexError):
    pass


class SubViewOutOfBounds(DomainError, IndexError):
    pass


class AxisOutOfRange(DomainError, IndexError):
    pass


class ValueOutOfRange(DomainError, IndexError):
    pass


class ViewOutOfBuffer(DomainError, IndexError):
    """The view addresses elements beyond the end of its buffer."""


class NotAPermutation(DomainError):
    pass


class NotUnstrided(DomainError):
    pass


class SizeMismatch(DomainError):
    pass


class ShapeMismatch(DomainError):
    pass


class KindMismatch(DomainError, TypeError):
    """Operands have different element kinds (no implicit promotion)."""


class ZeroStrideDestination(DomainError):
    """A view with a zero stride cannot receive assignments."""


class DivisionByZero(DomainError, ZeroDivisionError):
    pass


class WriteToReadOnly(ArrayError, PermissionError):
    pass


class DereferenceAtEnd(ArrayError, IndexError):
    pass


class StaleCursor(ArrayError, RuntimeError):
    """The cursor's view was reshaped or resized after the cursor was made."""


class InvariantViolation(ArrayError, AssertionError):
    pass


class AllocationFailure(ArrayError, MemoryError):
    pass


class FormatError(ArrayError, ValueError):
    """Malformed tensor file."""


class BadMagic(FormatError):
    pass


class UnsupportedVersion(FormatError):
    pass


class UnknownElementCode(FormatError):
    pass


class UnknownOrderCode(FormatError):
    pass


class TruncatedPayload(FormatError):
    pass


class TrailingGarbage(FormatError):
    pass
