"""Exception hierarchy shared by every tailsum module."""


class TailsumError(Exception):
    """Base class for computation errors (CLI exit status 1)."""


class InvalidArgumentError(TailsumError, ValueError):
    pass


class NonInvertibleSeriesError(TailsumError, ZeroDivisionError):
    pass


class DivergentSeriesError(TailsumError):
    """The requested sum or tail integral does not exist."""


class InvalidPolicyError(TailsumError, ValueError):
    pass


class InternalInconsistencyError(TailsumError):
    """Coefficient tables contradict each other (corrupted or tampered data)."""


class UnsupportedError(TailsumError):
    pass
