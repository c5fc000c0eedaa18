"""
Error types for the calculus engine.

Everything that can go wrong with an input (a map between the wrong sets, an
arity past the configured bound, a composition that would need infinitely many
summands) raises one of these. Law failures are not errors: checkers hand back
a LawReport and let the caller decide.

The exit code travels with the exception so the CLI can turn it straight into
a process status.
"""

from typing import Any, Dict, Optional


class CalculusError(Exception):
    def __init__(self, message: str, exit_code: int = 2, details: Optional[Dict[str, Any]] = None):
        self.message = message
        self.exit_code = exit_code
        self.details = details or {}
        super().__init__(self.message)

    @property
    def kind(self) -> str:
        return getattr(self, "error_name", "calculus-error")


class DomainError(CalculusError):
    """Maps or G-sets that do not fit together."""
    error_name = "domain-error"


class PreconditionError(CalculusError):
    error_name = "precondition-error"


class CapacityError(CalculusError):
    """Something would have to be enumerated past the configured bound."""
    error_name = "capacity-error"


class UnboundedCompositionError(CalculusError):
    error_name = "unbounded-composition-error"


class UnboundedEvaluationError(CalculusError):
    error_name = "unbounded-evaluation-error"


class UnknownEntryError(CalculusError):
    error_name = "unknown-id"


class DocumentError(CalculusError):
    error_name = "document-error"
