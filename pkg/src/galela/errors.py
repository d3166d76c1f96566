"""Shared exception types."""


class CapExceeded(Exception):
    """An enumeration would exceed the configured size cap."""


class VerificationError(Exception):
    """A structural cross-check failed; carries a counterexample."""

    def __init__(self, message, details=None):
        super().__init__(message)
        self.details = details if details is not None else {}
