"""Strong blocking sets.

This submodule verifies the strong blocking property of point sets, gives
the lower bound on their size, and implements the two structural checks that
characterise the nine-point strong blocking sets of PG(3, 2).

A point set S of PG(k-1, q) is a strong blocking set when, for every
hyperplane H, the points of S on H span H. Equivalently the intersection
S ∩ H has rank k - 1 for every H.

Exports:
    BlockingReport: Model representing a strong blocking verdict.
    PlaneSectionReport: Model representing the plane-section check.
    LineCountReport: Model representing the contained-line check.
    is_strong_blocking_set: Check the strong blocking property.
    is_strong_mask: Fast boolean check on a raw bitmask.
    lower_bound: Smallest possible size of a strong blocking set.
    corollary_bound: Binary lower bound 3(k - 1).
    is_minimal_strong_blocking_set: Strong and of size equal to the bound.
    check_plane_sections: Plane-section check for nine points of PG(3, 2).
    check_contained_lines: Contained-line check for nine points of PG(3, 2).
"""

from __future__ import annotations

import logging
from collections import Counter
from typing import TYPE_CHECKING, Annotated, Self

from pydantic import Field, NonNegativeInt, PositiveInt, model_validator

from .errors import InputValidationError, PreconditionError
from .field import check_field
from .schemas import LockedModel
from .utils import projective_space

if TYPE_CHECKING:
    from .geometry import Geometry, PointSet


logger: logging.Logger = logging.getLogger(__name__)


QUADRIC_SIZE: int = 9
SECTION_CAP: int = 5


__all__: list[str] = [
    "BlockingReport",
    "LineCountReport",
    "PlaneSectionReport",
    "check_contained_lines",
    "check_plane_sections",
    "corollary_bound",
    "is_minimal_strong_blocking_set",
    "is_strong_blocking_set",
    "is_strong_mask",
    "lower_bound",
]


class BlockingReport(LockedModel):
    """Strong blocking verdict.

    Attributes:
        k (PositiveInt): Dimension of the underlying vector space.
        q (PositiveInt): Field order.
        size (NonNegativeInt): Number of points checked.
        is_strong (bool): Whether every hyperplane is spanned by its section.
        failing_hyperplanes (tuple[int, ...]): Hyperplanes whose section has
            rank below k - 1; only the first one unless the check was total.
        intersection_profile (tuple[int, ...]): |S ∩ H| for every
            hyperplane H, in hyperplane order.

    """

    k: Annotated[PositiveInt, Field(title="k", description="Vector dimension.")]
    q: Annotated[PositiveInt, Field(title="q", description="Field order.")]
    size: Annotated[
        NonNegativeInt,
        Field(
            title="Size",
            description="Number of points checked.",
        ),
    ]
    is_strong: Annotated[
        bool,
        Field(
            title="Strong",
            description="Whether every hyperplane is spanned by its section.",
        ),
    ]
    failing_hyperplanes: Annotated[
        tuple[int, ...],
        Field(
            title="Failing hyperplanes",
            description="Hyperplanes whose section does not span them.",
        ),
    ] = ()
    intersection_profile: Annotated[
        tuple[int, ...],
        Field(
            title="Intersection profile",
            description="Section sizes in hyperplane order.",
        ),
    ]

    @model_validator(mode="after")
    def check_verdict(self) -> Self:
        """Ensure the verdict agrees with the failures and the profile."""
        if self.is_strong == bool(self.failing_hyperplanes):
            msg = "A set is strong exactly when no hyperplane fails."
            raise InputValidationError(error=ValueError(msg))
        if sum(self.intersection_profile) != self.size * (
            (self.q ** (self.k - 1) - 1) // (self.q - 1)
        ):
            msg = "Intersection profile does not add up to the set size."
            raise InputValidationError(error=ValueError(msg))
        return self

    @property
    def signature(self) -> dict[int, int]:
        """Multiplicity of each section size, largest size first."""
        counts = Counter(self.intersection_profile)
        return dict(sorted(counts.items(), reverse=True))


class PlaneSectionReport(LockedModel):
    """Plane-section check of a nine-point set of PG(3, 2).

    Attributes:
        holds (bool): Whether both section properties hold.
        oversized (tuple[int, ...]): Planes meeting S in more than five points.
        malformed (tuple[int, ...]): Planes containing a line of S whose
            section is not two concurrent lines.
        profile (tuple[int, ...]): |S ∩ π| for every plane π.

    """

    holds: Annotated[bool, Field(title="Holds", description="Check result.")]
    oversized: Annotated[
        tuple[int, ...],
        Field(
            title="Oversized",
            description="Planes meeting the set in more than five points.",
        ),
    ] = ()
    malformed: Annotated[
        tuple[int, ...],
        Field(
            title="Malformed",
            description="Planes on a contained line not cut in two lines.",
        ),
    ] = ()
    profile: Annotated[
        tuple[int, ...],
        Field(
            title="Profile",
            description="Section sizes in plane order.",
        ),
    ]


class LineCountReport(LockedModel):
    """Contained-line check of a nine-point set of PG(3, 2).

    Attributes:
        holds (bool): Whether every point lies on exactly two contained lines.
        counts (tuple[int, ...]): Contained lines through each point of S,
            in point order.
        violations (tuple[int, ...]): Points of S whose count is not two.

    """

    holds: Annotated[bool, Field(title="Holds", description="Check result.")]
    counts: Annotated[
        tuple[int, ...],
        Field(
            title="Counts",
            description="Contained lines through each point of the set.",
        ),
    ]
    violations: Annotated[
        tuple[int, ...],
        Field(
            title="Violations",
            description="Points not on exactly two contained lines.",
        ),
    ] = ()


def failing_hyperplanes(
    geometry: Geometry,
    mask: int,
    *,
    total: bool = False,
) -> tuple[int, ...]:
    """Return the hyperplanes whose section with a mask has deficient rank.

    Sections with fewer than k - 1 points are rejected without a rank
    computation; the rank computation stops once k - 1 is reached.

    Args:
        geometry (Geometry): The ambient space.
        mask (int): Bitmask of the point set.
        total (bool): Collect every failure instead of stopping at the first.

    """
    need = geometry.k - 1
    failures: list[int] = []
    for j, hyperplane in enumerate(geometry.point_in_hyperplane):
        section = mask & hyperplane
        if section.bit_count() >= need and geometry.rank(section, need) == need:
            continue
        failures.append(j)
        if not total:
            break
    return tuple(failures)


def is_strong_mask(geometry: Geometry, mask: int) -> bool:
    """Check the strong blocking property of a raw bitmask."""
    return not failing_hyperplanes(geometry, mask)


def is_strong_blocking_set(points: PointSet, *, total: bool = False) -> BlockingReport:
    """Check whether a point set is a strong blocking set.

    Args:
        points (PointSet): The point set S.
        total (bool): List every failing hyperplane rather than the first.

    Returns:
        out (BlockingReport): The verdict with the full intersection profile.
            An empty set fails on every hyperplane.

    Examples:
        ```python
        from strong_blocking_sets import (
            build_geometry,
            hyperbolic_quadric,
            is_strong_blocking_set,
        )

        pg = build_geometry(4, 2)
        print(is_strong_blocking_set(hyperbolic_quadric(pg)).is_strong)  # True
        ```

    """
    geometry = points.geometry
    total = total or not points.mask
    failures = failing_hyperplanes(geometry, points.mask, total=total)
    report = BlockingReport(
        k=geometry.k,
        q=geometry.q,
        size=len(points),
        is_strong=not failures,
        failing_hyperplanes=failures,
        intersection_profile=geometry.sections(points.mask),
    )
    logger.debug(
        "Set of size %d in %s is %s.",
        report.size,
        geometry.name,
        "strong" if report.is_strong else "not strong",
    )
    return report


def lower_bound(k: int, q: int) -> int:
    """Return the lower bound (k - 1)(q + 1) on the size of a strong blocking set.

    Raises:
        FieldError: If `q` is not prime.
        InputValidationError: If `k < 2`.

    """
    check_field(q)
    if k < 2:  # noqa: PLR2004
        msg = f"The bound needs k >= 2, got k = {k}."
        raise InputValidationError(error=ValueError(msg))
    return (k - 1) * (q + 1)


def corollary_bound(k: int) -> int:
    """Return the binary lower bound 3(k - 1)."""
    return lower_bound(k, 2)


def is_minimal_strong_blocking_set(points: PointSet) -> bool:
    """Check whether a set is strong and meets the lower bound in size."""
    geometry = points.geometry
    if len(points) != lower_bound(geometry.k, geometry.q):
        return False
    return is_strong_mask(geometry, points.mask)


def _require_nine(points: PointSet) -> None:
    if len(points) != QUADRIC_SIZE:
        msg = f"The check needs {QUADRIC_SIZE} points, got {len(points)}."
        logger.error(msg)
        raise PreconditionError(message=msg)


@projective_space(4, 2)
def check_plane_sections(points: PointSet) -> PlaneSectionReport:
    """Check the plane sections of a nine-point set of PG(3, 2).

    The check holds when (a) every plane meets S in at most five points and
    (b) every plane containing a line of S meets S in exactly five points
    forming two concurrent lines.

    Args:
        points (PointSet): Nine points of PG(3, 2).

    Returns:
        out (PlaneSectionReport): Verdict and the violating planes.

    Raises:
        GeometryMismatchError: If the set is not in PG(3, 2).
        PreconditionError: If the set does not have nine points.

    """
    _require_nine(points)
    geometry = points.geometry
    profile = geometry.sections(points.mask)

    oversized = tuple(j for j, size in enumerate(profile) if size > SECTION_CAP)
    malformed: list[int] = []
    for j, plane in enumerate(geometry.point_in_hyperplane):
        section = points.mask & plane
        lines = geometry.contained_lines(section)
        if not lines:
            continue
        union = 0
        for line in lines:
            union |= geometry.lines[line].mask
        if profile[j] != SECTION_CAP or len(lines) != 2 or union != section:  # noqa: PLR2004
            malformed.append(j)

    report = PlaneSectionReport(
        holds=not oversized and not malformed,
        oversized=oversized,
        malformed=tuple(malformed),
        profile=profile,
    )
    logger.debug("Plane-section check: %s.", report)
    return report


@projective_space(4, 2)
def check_contained_lines(points: PointSet) -> LineCountReport:
    """Check that every point of a nine-point set lies on two of its lines.

    Args:
        points (PointSet): Nine points of PG(3, 2).

    Returns:
        out (LineCountReport): Per-point counts of lines inside S.

    Raises:
        GeometryMismatchError: If the set is not in PG(3, 2).
        PreconditionError: If the set does not have nine points.

    """
    _require_nine(points)
    geometry = points.geometry
    contained = set(geometry.contained_lines(points.mask))
    counts = tuple(
        sum(1 for j in geometry.lines_on_point[i] if j in contained)
        for i in points.indices
    )
    violations = tuple(
        i for i, count in zip(points.indices, counts, strict=True) if count != 2  # noqa: PLR2004
    )
    return LineCountReport(
        holds=not violations,
        counts=counts,
        violations=violations,
    )
