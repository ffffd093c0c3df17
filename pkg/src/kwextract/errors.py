"""Exception types shared across the package."""


class KwextractError(Exception):
    """Base class for all errors raised by this package."""


class CorpusError(KwextractError):
    """Fatal problem with the input corpus (missing, empty, unreadable)."""


class ProtocolError(KwextractError):
    """A training-session operation was called out of order."""


class SessionIncompleteError(KwextractError):
    """An operation that requires a finished training session got a partial one."""


class StoreError(KwextractError):
    """A persisted document could not be written, read, or validated."""
