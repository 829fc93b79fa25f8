"""Exception types shared across the package."""


class CutoffError(IndexError):
    """An excitation index or series cutoff exceeded the configured bound."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class NumericsError(ArithmeticError):
    """A numerical routine failed to meet its accuracy contract."""
