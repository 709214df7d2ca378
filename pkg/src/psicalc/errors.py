"""Exception hierarchy shared across the package.

The split between :class:`DomainError` and :class:`InternalError` mirrors the
CLI exit-code contract: domain errors are the user's problem (exit 2),
internal errors mean the library disagrees with itself (exit 3).
"""


class PsicalcError(Exception):
    """Base class for all package errors."""


class DomainError(PsicalcError):
    """A request that the mathematics rejects (not a bug)."""


class UnstableSpecError(DomainError):
    """The moduli space behind a request does not exist.

    The message names the formal convention that applies where one does,
    e.g. the genus-0 one- and two-point conventions.
    """


class NotDivisibleError(PsicalcError):
    """Exact polynomial division failed; carries the offending remainder."""

    def __init__(self, message, remainder=None):
        super().__init__(message)
        self.remainder = remainder


class WindowError(PsicalcError):
    """A truncated Laurent expansion was read outside its valid window."""


class CacheFormatError(DomainError):
    """A correlator cache file is malformed or has an unsupported version."""


class InternalError(PsicalcError):
    """An invariant the library guarantees was violated (a bug)."""


class MethodDisagreementError(InternalError):
    """Independent evaluation routes returned different values."""

    def __init__(self, message, values=None):
        super().__init__(message)
        self.values = dict(values or {})
