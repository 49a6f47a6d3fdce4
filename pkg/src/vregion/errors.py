"""Exception types shared across the package."""


class PoleError(ZeroDivisionError):
    """A denominator fell below the pole epsilon."""


class DomainError(ValueError):
    """Parameters or arguments outside the admissible domain."""


class RegimeError(ValueError):
    """An extremal builder was asked for the wrong branch of the boundary."""
