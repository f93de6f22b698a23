"""
Custom exception hierarchy for the kernel.
"""

from typing import Any


class RiskPrefException(Exception):
    """Base exception for all kernel exceptions."""

    def __init__(self, message: str, details: dict[str, Any] | None = None):
        self.message = message
        self.details = details or {}
        super().__init__(self.message)


class InputValidationError(RiskPrefException):
    """Raised when an input or a precondition is invalid."""
    pass


class UnsupportedKindError(RiskPrefException):
    """Raised when an operation does not support the measure kind or dimension."""
    pass


class DimensionMismatchError(RiskPrefException):
    """Raised when operands live in different dimensions or sample spaces."""
    pass


class EvaluationDomainError(RiskPrefException):
    """Raised when a utility is evaluated outside its declared domain."""
    pass


class NegativeCoefficientError(RiskPrefException):
    """Raised when a comonotonic combination receives a negative weight."""
    pass


class LevelNotReachableError(RiskPrefException):
    """Raised when a coarsening level is not a level of the quantile."""
    pass


class NormalizationError(RiskPrefException):
    """Raised when an operation needs w(1) = 1 and does not get it."""
    pass


class MalformedDatasetError(RiskPrefException):
    """Raised when a preference dataset is inconsistent with its mode."""
    pass


class SolverStallError(RiskPrefException):
    """Raised when the simplex solver exceeds its iteration cap."""
    pass
