"""Shared exception types."""


class DomainError(ValueError):
    """An input lies outside the mathematical domain of an operation."""


class PoleError(DomainError):
    """An evaluation point hit (or numerically overflowed at) a pole."""
