class TcaError(Exception):
    """Base class for errors raised by tcakit."""


class GuardError(TcaError):
    """An input exceeds a size guard set to keep brute-force computations tractable."""


class GroupTooLargeError(TcaError):
    """Group closure exceeded its element cap (the group is too large or infinite)."""


class SingularMatrixError(TcaError):
    pass


class ModularError(TcaError):
    """The requested averaging method needs the characteristic to be coprime to the group order."""


class UnsupportedLengthError(TcaError):
    """No length oracle is available for a partition in positive characteristic."""
