"""
Exception hierarchy shared by every graphvar module.

All errors derive from ``ValueError`` so callers that only care about "bad
input" can keep catching the built-in type, while the CLI maps each subclass
to a machine-readable error object.
"""

from typing import Any, Optional


class GraphVarError(ValueError):
    """Base class for domain failures raised by graphvar."""

    code = "graphvar_error"

    def __init__(self, message: str, details: Optional[Any] = None):
        super().__init__(message)
        self.details = details

    def to_json(self) -> dict:
        """
        Render the error as the JSON object written to standard error.

        Returns:
            dict: ``{"error": code, "message": ...}`` plus ``details`` when present.
        """
        payload = {"error": self.code, "message": str(self)}
        if self.details is not None:
            payload["details"] = self.details
        return payload


class ParameterError(GraphVarError):
    code = "parameter_error"


class SizeLimitError(GraphVarError):
    code = "size_limit"


class HypothesisError(GraphVarError):
    code = "hypothesis_violation"


class InconsistencyError(GraphVarError):
    """Two algorithms that must agree did not; ``details`` holds every result."""

    code = "internal_inconsistency"


class UsageError(GraphVarError):
    code = "usage"
