"""Exception types shared across the package."""


class CapabilityError(RuntimeError):
    """Input is valid in principle but outside the range this build computes."""


class InsufficientData(LookupError):
    """The built-in tables carry no data for the requested character."""


class OutOfScope(ValueError):
    """The request falls outside what the classification results cover."""
