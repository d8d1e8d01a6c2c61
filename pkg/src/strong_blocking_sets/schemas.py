"""Common schema primitives.

This submodule defines common Pydantic models, enums, and protocols used
throughout the package.

Exports:
    LockedModel: Model with immutable fields.
    CleanEnum: Enum with clean representation.
    Progress: Protocol for reporting progress of long enumerations.
"""

from __future__ import annotations

from enum import Enum
from typing import Protocol

from pydantic import (
    BaseModel,
    ConfigDict,
)

__all__: list[str] = [
    "CleanEnum",
    "LockedModel",
    "Progress",
]


class LockedModel(BaseModel):
    """Model with immutable fields.

    Represents a value whose attributes remain frozen (read-only) after
    initialization. Geometries, point sets, codes and reports are all shared
    between workers, so none of them may change once built.
    """

    model_config = ConfigDict(
        extra="forbid",
        frozen=True,
        validate_assignment=True,
        use_enum_values=False,
        arbitrary_types_allowed=True,
    )


class CleanEnum(Enum):
    """Enum whose members print as their command-line token.

    Search modes, subcommands and configuration names all appear on the
    command line and in JSON reports under their value.
    """

    def __repr__(self) -> str:
        """Return member representation in `Class.Member` format."""
        return f"{type(self).__name__}.{self.name}"

    def __str__(self) -> str:
        """Return the member value, e.g. `pruned-exhaustive`."""
        return str(self.value)


class Progress(Protocol):
    """Progress reporter for long enumerations.

    Classification reports subsets bucketed so far and searches report
    finished work units. Callbacks run in the parent process only.

    Args:
        current (int): Units done so far, never decreasing.
        total (int | None): Total unit count, or None when unknown.

    """

    def __call__(self, current: int, total: int | None) -> None:
        """Report progress of an enumeration."""
        ...
