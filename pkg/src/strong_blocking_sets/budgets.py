"""Work budget utilities.

This submodule provides the caps that bound every exhaustive computation in
the package, helpers to read overrides from environment variables, and a
check that raises when an operation would need more than its budget.

Exports:
    Budgets: Model holding all work and size caps.
    budgets: Parses budget overrides from an environment mapping.
    require: Raises when a required amount exceeds a budget.
"""

from __future__ import annotations

import logging
import os
from typing import TYPE_CHECKING, Annotated, Self

from pydantic import Field, PositiveInt, ValidationError

from .errors import BudgetExceededError, InputValidationError
from .schemas import LockedModel

if TYPE_CHECKING:
    from collections.abc import Mapping


logger: logging.Logger = logging.getLogger(__name__)


ENV_PREFIX: str = "SBS_BUDGET_"


__all__: list[str] = [
    "Budgets",
    "budgets",
    "require",
]


class Budgets(LockedModel):
    """Work and size caps.

    Represents the limits applied before any table is built or any space is
    enumerated. Every field may be overridden through an environment variable
    named `SBS_BUDGET_<FIELD>` (for example `SBS_BUDGET_SUBSETS=2000000000`).

    Attributes:
        max_k (PositiveInt): Largest vector space dimension of a geometry.
        max_q (PositiveInt): Largest field order of a geometry.
        max_points (PositiveInt): Largest number of points of a geometry.
        codewords (PositiveInt): Largest number of codewords enumerated.
        group (PositiveInt): Largest group order enumerated.
        group_table (PositiveInt): Largest number of entries in the dense
            image table of a group, order times 2^k.
        subsets (PositiveInt): Largest number of subsets scanned exhaustively.
        nodes (PositiveInt): Default node limit of pruned searches.
        trials (PositiveInt): Default trial limit of randomized searches.

    """

    max_k: Annotated[
        PositiveInt,
        Field(
            title="Maximum k",
            description="Largest vector space dimension of a geometry.",
        ),
    ] = 8
    max_q: Annotated[
        PositiveInt,
        Field(
            title="Maximum q",
            description="Largest field order of a geometry.",
        ),
    ] = 7
    max_points: Annotated[
        PositiveInt,
        Field(
            title="Maximum points",
            description="Largest number of points of a geometry.",
        ),
    ] = 1023
    codewords: Annotated[
        PositiveInt,
        Field(
            title="Codewords",
            description="Largest number of codewords enumerated.",
        ),
    ] = 2**24
    group: Annotated[
        PositiveInt,
        Field(
            title="Group",
            description="Largest group order enumerated.",
        ),
    ] = 10**7
    group_table: Annotated[
        PositiveInt,
        Field(
            title="Group table",
            description="Largest number of entries in a group image table.",
        ),
    ] = 2**24
    subsets: Annotated[
        PositiveInt,
        Field(
            title="Subsets",
            description="Largest number of subsets scanned exhaustively.",
        ),
    ] = 10**9
    nodes: Annotated[
        PositiveInt,
        Field(
            title="Nodes",
            description="Default node limit of pruned searches.",
        ),
    ] = 10**9
    trials: Annotated[
        PositiveInt,
        Field(
            title="Trials",
            description="Default trial limit of randomized searches.",
        ),
    ] = 10**5

    @classmethod
    def from_env(cls) -> Self:
        """Build budgets from the process environment.

        Returns:
            out (Budgets): Defaults updated with any `SBS_BUDGET_*` overrides.

        Raises:
            InputValidationError: If an override is not a positive integer.

        """
        return budgets(os.environ)


def budgets(environ: Mapping[str, str]) -> Budgets:
    """Extract budget overrides from an environment mapping.

    Args:
        environ (Mapping[str, str]): Environment variables; keys starting with
            `SBS_BUDGET_` are matched case-insensitively against the fields of
            `Budgets`. Unknown keys are ignored with a warning.

    Returns:
        out (Budgets): Budgets with the overrides applied.

    Raises:
        InputValidationError: If an override is not a positive integer.

    """
    data: dict[str, str] = {}
    for key, value in environ.items():
        if not key.upper().startswith(ENV_PREFIX):
            continue
        name = key[len(ENV_PREFIX) :].lower()
        if name not in Budgets.model_fields:
            logger.warning("Ignoring unknown budget variable '%s'.", key)
            continue
        data[name] = value

    if data:
        logger.debug("Budget overrides from environment: %s", data)

    try:
        return Budgets.model_validate(data)
    except ValidationError as e:
        raise InputValidationError(error=e) from e


def require(
    operation: str,
    required: int,
    budget: int,
    hint: str | None = None,
) -> None:
    """Check that an operation fits in its budget.

    Args:
        operation (str): Name of the operation, used in the error message.
        required (int): Amount of work the operation needs.
        budget (int): Amount of work allowed.
        hint (str | None): Suggested alternative reported on failure.

    Raises:
        BudgetExceededError: If `required` is larger than `budget`.

    """
    if required > budget:
        logger.error(
            "Operation '%s' requires %d, above the budget of %d.",
            operation,
            required,
            budget,
        )
        raise BudgetExceededError(operation, required, budget, hint)
