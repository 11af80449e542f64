class MulticoreError(Exception):
    """Base class for errors raised by this package."""


class ParseError(MulticoreError, ValueError):
    """Malformed text literal (partition, multipartition, datum, ...)."""


class PreconditionError(MulticoreError, ValueError):
    """An operation was called outside its domain."""


class LevelMismatchError(PreconditionError):
    pass


class SizeGuardError(PreconditionError):
    """Brute-force oracle refused an input that is too large to enumerate."""


class InfiniteSetError(MulticoreError):
    """Complete enumeration was requested for an infinite set of cores."""
