"""Shared exception types for the morse_ensemble package."""

from __future__ import annotations

__all__ = [
    "MorseEnsembleError",
    "DimensionMismatchError",
    "EmptyInputError",
    "NotFoundError",
    "ParameterError",
    "StructuralError",
    "PreconditionError",
    "BudgetExceededError",
    "InternalConsistencyError",
]


class MorseEnsembleError(Exception):
    """Base class for all package errors."""


class DimensionMismatchError(MorseEnsembleError, ValueError):
    """Operands disagree on the number of polynomial variables."""


class EmptyInputError(MorseEnsembleError, ValueError):
    """An operation received an empty complex or poset it cannot accept."""


class NotFoundError(MorseEnsembleError, KeyError):
    """A referenced element, fixture, or file does not exist."""


class ParameterError(MorseEnsembleError, ValueError):
    """A size or option parameter is out of its documented range."""


class StructuralError(MorseEnsembleError, ValueError):
    """Input violates a structural invariant (e.g. a pair is not a cover)."""


class PreconditionError(MorseEnsembleError, ValueError):
    """A documented operation precondition does not hold."""


class BudgetExceededError(MorseEnsembleError, RuntimeError):
    """A work budget was exhausted; no partial answer is returned."""


class InternalConsistencyError(MorseEnsembleError, RuntimeError):
    """An internal cross-check failed; indicates a bug, never user error."""
