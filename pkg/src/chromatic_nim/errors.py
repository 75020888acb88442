"""Exception types shared across the package."""


class ChromaticNimError(Exception):
    """Base class for errors raised by this package."""


class IllegalMove(ChromaticNimError):
    """A move rejected by the rules; ``code`` is a stable machine-readable reason."""

    def __init__(self, code: str, message: str) -> None:
        super().__init__(message)
        self.code = code
        self.message = message


class ColorUnavailable(ChromaticNimError, LookupError):
    """Asked for the i-th red or green level of a scheme that runs out of them."""


class HeightLimitExceeded(ChromaticNimError):
    """A heap height is beyond the configured engine bound."""


class NotApplicable(ChromaticNimError, ValueError):
    """A closed-form strategy was invoked on a scheme outside its preconditions."""
