class DomainError(ValueError):
    """Invalid input to a computation (bad polygon, violated balance condition, ...)."""


class GuardExceeded(RuntimeError):
    """An enumeration or state-count guard was hit."""
