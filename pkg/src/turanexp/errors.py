"""Shared exception types."""


class CapacityError(Exception):
    """Raised when an input exceeds a configured desk-scale bound.

    These bounds exist so that exhaustive routines fail loudly instead of
    silently running forever.  CLI commands translate this into exit code 3.
    """


class UnbalancedTreeError(ValueError):
    """Raised when a pipeline requires a balanced tree and the check fails.

    Carries the offending subset so callers can report the witness.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness
