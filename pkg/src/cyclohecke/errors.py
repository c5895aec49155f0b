"""Exception types."""


class VerificationError(AssertionError):
    """A computed object failed a property that theory says must hold."""
