class AbelWallsError(Exception):
    """Base class for library errors."""


class PreconditionError(AbelWallsError, ValueError):
    """An operation was called outside its domain."""


class SlopeUndefinedError(PreconditionError):
    pass


class UnsupportedTargetError(PreconditionError):
    """The wall enumerator only handles targets of shape (0|1, c >= 1, chi)."""


class NotApplicableError(PreconditionError):
    pass


class VerificationError(AbelWallsError):
    """A numerical check that mirrors a step of a proof did not hold."""
