"""Exception types raised across the package."""

from typing import Optional, Sequence

__all__ = [
    "ChoiceToolsError",
    "DatasetError",
    "RelationDefectError",
    "InternalDefectError",
]


class ChoiceToolsError(Exception):
    """Base class for errors raised by choice-tools."""


class DatasetError(ChoiceToolsError, ValueError):
    """A choice dataset is malformed, inconsistent or does not cover every menu."""


class RelationDefectError(ChoiceToolsError, ValueError):
    """
    A binary relation is not the kind of order required.

    Args:
        message: Human-readable description of the defect.
        prop: Name of the property that failed, ``complete``, ``transitive`` or ``antisymmetric``.
        witness: Alternatives demonstrating the failure, a pair or a triple.
    """

    def __init__(self, message: str, prop: str, witness: Optional[Sequence[int]] = None):
        super().__init__(message)
        self.prop = prop
        self.witness = tuple(witness) if witness is not None else None


class InternalDefectError(ChoiceToolsError, RuntimeError):
    """
    A result that the characterization rules out was produced.

    This is never a property of the input data. Seeing it means there is a bug in the package.
    """
