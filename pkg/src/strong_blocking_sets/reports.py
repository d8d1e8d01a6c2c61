"""Command report schema.

This submodule defines the typed payloads of the `sbs` command reports and
the `Report` envelope that carries them. The JSON Schema of the envelope is
published through `report_schema` and `sbs --schema`; its identifier carries
`SCHEMA_VERSION`, which changes whenever a payload field is added, removed or
retyped.

Payload records mirror the JSON form of the domain reports: codewords carry
their support and weight, point sets carry their coordinates.

Exports:
    SCHEMA_VERSION: Version of the report schema.
    Report: Model representing a command report.
    Payload: Union of all command payloads.
    VerifyPayload: Payload of `sbs verify`.
    CodeCheckPayload: Payload of `sbs code-check`.
    ClassifyPayload: Payload of `sbs classify`.
    SearchPayload: Payload of `sbs search`.
    QuadricPayload: Payload of `sbs quadric`.
    BoundPayload: Payload of `sbs bound`.
    report_schema: JSON Schema of the report envelope.
"""

from __future__ import annotations

import logging
from typing import Annotated, Any, Self

from pydantic import (
    Field,
    NonNegativeFloat,
    NonNegativeInt,
    PositiveInt,
    SerializerFunctionWrapHandler,
    model_serializer,
    model_validator,
)

from .__meta__ import __version__
from .blocking import BlockingReport, LineCountReport, PlaneSectionReport
from .errors import InputValidationError
from .schemas import LockedModel

logger: logging.Logger = logging.getLogger(__name__)


__all__: list[str] = [
    "SCHEMA_VERSION",
    "BoundPayload",
    "ClassifyPayload",
    "CodeCheckPayload",
    "Payload",
    "QuadricPayload",
    "Report",
    "SearchPayload",
    "VerifyPayload",
    "report_schema",
]


SCHEMA_VERSION: str = "1"


class CodewordRecord(LockedModel):
    """Codeword as written in reports."""

    vector: tuple[int, ...]
    q: PositiveInt
    support: tuple[int, ...]
    weight: NonNegativeInt


class WitnessRecord(LockedModel):
    """Non-minimality witness as written in reports."""

    codeword: CodewordRecord
    contained: CodewordRecord


class MinimalityRecord(LockedModel):
    """Code minimality verdict as written in reports."""

    minimal: bool
    witnesses: tuple[WitnessRecord, ...] = ()
    n: PositiveInt
    k: PositiveInt
    q: PositiveInt


class PointSetRecord(LockedModel):
    """Point set as written in reports."""

    k: PositiveInt
    q: PositiveInt
    points: tuple[tuple[int, ...], ...]


class OrbitRecord(LockedModel):
    """Orbit as written in reports."""

    representative: PointSetRecord
    orbit_size: PositiveInt
    stabilizer_order: PositiveInt
    group_order: PositiveInt
    signature: tuple[int, ...]
    is_strong: bool


class GoldenRecord(LockedModel):
    """Comparison of the nine-point orbits of PG(3, 2) with the known table.

    Attributes:
        configurations (dict[str, int]): Orbit size of each configuration.
        matched (bool): Whether every size agrees with the table.

    """

    configurations: dict[str, PositiveInt]
    matched: bool


class PayloadModel(LockedModel):
    """Command payload. Absent optional fields are left out of the JSON form."""

    @model_serializer(mode="wrap")
    def drop_absent(self, handler: SerializerFunctionWrapHandler) -> dict[str, Any]:
        """Drop fields whose value is None."""
        data = handler(self)
        return {key: value for key, value in data.items() if value is not None}


class VerifyPayload(PayloadModel):
    """Payload of `sbs verify`.

    The structural checks are only present for nine points of PG(3, 2).
    """

    blocking: BlockingReport
    lower_bound: PositiveInt
    plane_sections: PlaneSectionReport | None = None
    contained_lines: LineCountReport | None = None


class CodeCheckPayload(PayloadModel):
    """Payload of `sbs code-check`.

    Degenerate generators skip the point-set side, so `collapsed`,
    `blocking` and `agree` are absent for them.
    """

    code: MinimalityRecord
    degenerate: bool
    collapsed: tuple[int, ...] | None = None
    blocking: BlockingReport | None = None
    agree: bool | None = None


class ClassifyPayload(PayloadModel):
    """Payload of `sbs classify`."""

    group_order: PositiveInt
    total: NonNegativeInt
    orbits: tuple[OrbitRecord, ...]
    golden: GoldenRecord | None = None


class SearchPayload(PayloadModel):
    """Payload of `sbs search`."""

    found: NonNegativeInt
    nodes_explored: NonNegativeInt
    exhausted: bool


class QuadricPayload(PayloadModel):
    """Payload of `sbs quadric`."""

    size: PositiveInt
    is_strong: bool
    points: tuple[tuple[int, ...], ...]


class BoundPayload(PayloadModel):
    """Payload of `sbs bound`."""

    lower_bound: PositiveInt


type Payload = (
    VerifyPayload
    | CodeCheckPayload
    | ClassifyPayload
    | SearchPayload
    | QuadricPayload
    | BoundPayload
)

PAYLOADS: dict[str, type[PayloadModel]] = {
    "verify": VerifyPayload,
    "code-check": CodeCheckPayload,
    "classify": ClassifyPayload,
    "search": SearchPayload,
    "quadric": QuadricPayload,
    "bound": BoundPayload,
}


class Report(LockedModel):
    """Command report.

    Attributes:
        command (str): Subcommand name.
        version (str): Version of the package that produced the report.
        inputs (dict[str, Any]): Parameters of the run.
        payload (Payload): Command-specific verdicts and counters.
        elapsed (NonNegativeFloat): Wall-clock duration in seconds.

    """

    command: Annotated[str, Field(title="Command", description="Subcommand.")]
    version: Annotated[
        str,
        Field(
            title="Version",
            description="Package version.",
        ),
    ] = __version__
    inputs: Annotated[
        dict[str, Any],
        Field(
            title="Inputs",
            description="Parameters of the run.",
        ),
    ]
    payload: Annotated[
        Payload,
        Field(
            title="Payload",
            description="Command-specific verdicts and counters.",
        ),
    ]
    elapsed: Annotated[
        NonNegativeFloat,
        Field(
            title="Elapsed",
            description="Wall-clock duration in seconds.",
        ),
    ]

    @model_validator(mode="after")
    def check_payload(self) -> Self:
        """Ensure the payload belongs to the command."""
        expected = PAYLOADS.get(self.command)
        if expected is None:
            msg = f"Unknown command {self.command!r}."
            raise InputValidationError(error=ValueError(msg))
        if not isinstance(self.payload, expected):
            msg = (
                f"Command {self.command!r} carries a "
                f"{type(self.payload).__name__}, expected {expected.__name__}."
            )
            raise InputValidationError(error=ValueError(msg))
        return self


def report_schema() -> dict[str, Any]:
    """Return the JSON Schema of the report envelope."""
    schema = Report.model_json_schema()
    schema["$id"] = f"strong_blocking_sets/report/v{SCHEMA_VERSION}"
    logger.debug("Report schema has %d definitions.", len(schema.get("$defs", {})))
    return schema
