"""Group actions and orbit classification.

This submodule enumerates the general linear group GL(k, 2) acting on the
points of PG(k-1, 2), computes canonical forms, orbits and stabilisers of
point sets, and classifies all subsets of a given size into orbits. Over
GF(2) the scalar group is trivial, so GL(k, 2) and PGL(k, 2) coincide.

Group elements are stored as point permutations; applying one to a point set
maps a bitmask to a bitmask, and the whole group is applied at once with
numpy.

Exports:
    GroupElement: Model representing one invertible matrix.
    Group: Model representing the full group as permutation tables.
    OrbitReport: Model representing one orbit of point sets.
    Configuration: Named nine-point configurations of PG(3, 2).
    PuncturedPlaneCensus: Model representing the punctured-plane count.
    LinePairCensus: Model representing the line-pair count.
    TheoremReport: Model representing the three-way classification check.
    gl_order: Order of GL(k, q).
    group_elements: Stream every element of GL(k, 2).
    build_group: Permutation tables of GL(k, 2) on a geometry.
    apply: Image of a point set under a group element.
    orbit: Orbit of a point set as a set of masks.
    canonical_form: Smallest image of a point set.
    stabilizer_order: Number of elements fixing a point set.
    intersection_signature: Sorted hyperplane section sizes.
    classify_subsets: Orbits of all subsets of a given size.
    remark_witnesses: One explicit set per nine-point configuration.
    punctured_plane_census: Raw and distinct punctured-plane configurations.
    line_pair_census: Configurations built from a line and two of its planes.
    check_main_theorem: Compare three classifications of nine-point sets.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from functools import cache
from itertools import combinations
from math import comb, prod
from typing import TYPE_CHECKING, Annotated, Self

import numpy as np
from pydantic import (
    Field,
    NonNegativeInt,
    PositiveInt,
    SkipValidation,
    model_validator,
)

from .blocking import (
    QUADRIC_SIZE,
    check_contained_lines,
    check_plane_sections,
    is_strong_mask,
)
from .budgets import Budgets, require
from .enumeration import partition, subset_masks
from .errors import (
    GeometryMismatchError,
    InputValidationError,
    PreconditionError,
)
from .field import BinaryBasis
from .geometry import (
    Geometry,
    PointSet,
    build_geometry,
    hyperbolic_quadric,
    iter_bits,
    plane_complement,
    punctured_plane,
)
from .schemas import CleanEnum, LockedModel
from .utils import binary, projective_space

if TYPE_CHECKING:
    from collections.abc import Iterator

    import numpy.typing as npt

    from .schemas import Progress


logger: logging.Logger = logging.getLogger(__name__)


GL42_ORDER: int = 20160
PGO_PLUS_ORDER: int = 72
GOLDEN_ORBITS: tuple[int, ...] = (280, 105, 420, 1680, 2520)
UNIT: int = 1 << 16


__all__: list[str] = [
    "GL42_ORDER",
    "GOLDEN_ORBITS",
    "PGO_PLUS_ORDER",
    "Configuration",
    "Group",
    "GroupElement",
    "LinePairCensus",
    "OrbitReport",
    "PuncturedPlaneCensus",
    "TheoremReport",
    "apply",
    "build_group",
    "canonical_form",
    "check_main_theorem",
    "classify_subsets",
    "gl_order",
    "group_elements",
    "intersection_signature",
    "line_pair_census",
    "orbit",
    "punctured_plane_census",
    "remark_witnesses",
    "stabilizer_order",
]


class Configuration(CleanEnum):
    """Nine-point configurations of PG(3, 2), one per orbit."""

    QUADRIC = "quadric"
    POINT_AND_PLANE_COMPLEMENT = "point-and-plane-complement"
    PLANE_AND_TWO_POINTS = "plane-and-two-points"
    PUNCTURED_PLANE_OFF_LINE = "punctured-plane-off-line"
    PUNCTURED_PLANE_ON_LINE = "punctured-plane-on-line"


class GroupElement(LockedModel):
    """Invertible matrix over GF(2) with its induced point permutation.

    Attributes:
        matrix (tuple[tuple[int, ...], ...]): Rows of the k x k matrix.
        permutation (tuple[int, ...]): Image index of every point.

    """

    matrix: Annotated[
        tuple[tuple[int, ...], ...],
        Field(
            title="Matrix",
            description="Rows of the invertible k x k matrix.",
        ),
    ]
    permutation: Annotated[
        tuple[int, ...],
        Field(
            title="Permutation",
            description="Image index of every point.",
            repr=False,
        ),
    ]

    @model_validator(mode="after")
    def check_element(self) -> Self:
        """Ensure the matrix is invertible and the permutation is bijective."""
        k = len(self.matrix)
        if any(len(row) != k for row in self.matrix):
            msg = "Group element matrix must be square."
            raise InputValidationError(error=ValueError(msg))
        basis = BinaryBasis()
        basis.extend(_column_ints(self.matrix))
        if basis.rank != k:
            msg = f"Matrix {self.matrix} is singular over GF(2)."
            raise InputValidationError(error=ValueError(msg))
        if sorted(self.permutation) != list(range(len(self.permutation))):
            msg = "Point images do not form a permutation."
            raise InputValidationError(error=ValueError(msg))
        return self


class Group(LockedModel):
    """GL(k, 2) acting on the points of PG(k-1, 2).

    Attributes:
        geometry (Geometry): The space acted on.
        columns (numpy.ndarray): Matrix columns as integers, one row per
            element, with coordinate 0 in the most significant bit.
        permutations (numpy.ndarray): Point images, one row per element.

    """

    geometry: Annotated[
        SkipValidation[Geometry],
        Field(
            title="Geometry",
            description="The space acted on.",
            repr=False,
        ),
    ]
    columns: Annotated[
        SkipValidation[np.ndarray],
        Field(
            title="Columns",
            description="Matrix columns per element.",
            repr=False,
        ),
    ]
    permutations: Annotated[
        SkipValidation[np.ndarray],
        Field(
            title="Permutations",
            description="Point images per element.",
            repr=False,
        ),
    ]

    @property
    def order(self) -> int:
        """Number of elements."""
        return int(self.permutations.shape[0])

    def element(self, position: int) -> GroupElement:
        """Return the element at a position of the enumeration order."""
        columns = tuple(int(c) for c in self.columns[position])
        return GroupElement(
            matrix=_rows(columns, self.geometry.k),
            permutation=tuple(int(i) for i in self.permutations[position]),
        )

    def elements(self) -> Iterator[GroupElement]:
        """Yield every element in enumeration order."""
        for position in range(self.order):
            yield self.element(position)

    def images(self, mask: int) -> npt.NDArray[np.uint64]:
        """Return the image mask of a point set under every element."""
        indices = list(iter_bits(mask))
        if not indices:
            return np.zeros(self.order, dtype=np.uint64)
        bits = np.left_shift(
            np.uint64(1),
            self.permutations[:, indices].astype(np.uint64),
        )
        return np.bitwise_or.reduce(bits, axis=1)

    def check(self, points: PointSet) -> None:
        """Ensure a point set lives in the space acted on.

        Raises:
            GeometryMismatchError: If the geometries differ.

        """
        geometry = points.geometry
        if (geometry.k, geometry.q) != (self.geometry.k, self.geometry.q):
            raise GeometryMismatchError(
                expected=(self.geometry.k, self.geometry.q),
                actual=(geometry.k, geometry.q),
            )


class OrbitReport(LockedModel):
    """Orbit of point sets.

    Attributes:
        representative (PointSet): Canonical (smallest) member of the orbit.
        orbit_size (PositiveInt): Number of distinct sets in the orbit.
        stabilizer_order (PositiveInt): Elements fixing the representative.
        group_order (PositiveInt): Order of the acting group.
        signature (tuple[int, ...]): Hyperplane section sizes, descending.
        is_strong (bool): Whether the members are strong blocking sets.

    """

    representative: Annotated[
        PointSet,
        Field(
            title="Representative",
            description="Canonical member of the orbit.",
        ),
    ]
    orbit_size: Annotated[
        PositiveInt,
        Field(title="Orbit size", description="Distinct sets in the orbit."),
    ]
    stabilizer_order: Annotated[
        PositiveInt,
        Field(title="Stabilizer", description="Elements fixing the set."),
    ]
    group_order: Annotated[
        PositiveInt,
        Field(title="Group order", description="Order of the acting group."),
    ]
    signature: Annotated[
        tuple[int, ...],
        Field(title="Signature", description="Section sizes, descending."),
    ]
    is_strong: Annotated[
        bool,
        Field(title="Strong", description="Whether members are strong."),
    ]

    @model_validator(mode="after")
    def check_orbit_stabilizer(self) -> Self:
        """Ensure orbit size times stabilizer order equals the group order."""
        if self.orbit_size * self.stabilizer_order != self.group_order:
            msg = (
                f"Orbit size {self.orbit_size} and stabilizer order "
                f"{self.stabilizer_order} do not multiply to {self.group_order}."
            )
            raise InputValidationError(error=ValueError(msg))
        return self


class PuncturedPlaneCensus(LockedModel):
    """Punctured planes plus three external points.

    A configuration is a plane π with one point P removed, together with
    three points off π; the plane of the three points meets π in a line ℓ.

    Attributes:
        raw (NonNegativeInt): Number of (π, P, triple) choices.
        raw_off_line (NonNegativeInt): Choices with P not on ℓ.
        raw_on_line (NonNegativeInt): Choices with P on ℓ.
        off_line (tuple[int, ...]): Distinct masks with P not on ℓ.
        on_line (tuple[int, ...]): Distinct masks with P on ℓ.

    """

    raw: NonNegativeInt
    raw_off_line: NonNegativeInt
    raw_on_line: NonNegativeInt
    off_line: Annotated[tuple[int, ...], Field(repr=False)]
    on_line: Annotated[tuple[int, ...], Field(repr=False)]


class LinePairCensus(LockedModel):
    """A line plus two of its planes, each missing one point off the line.

    Attributes:
        raw (NonNegativeInt): Number of (line, plane pair, dropped points)
            choices.
        masks (tuple[int, ...]): Distinct resulting masks.

    """

    raw: NonNegativeInt
    masks: Annotated[tuple[int, ...], Field(repr=False)]


class TheoremReport(LockedModel):
    """Three independent classifications of the nine-point sets of PG(3, 2).

    Attributes:
        subsets (PositiveInt): Number of nine-point sets scanned.
        strong (tuple[int, ...]): Sorted masks of the strong blocking sets.
        structural (tuple[int, ...]): Masks passing both structural checks.
        quadrics (tuple[int, ...]): Masks in the orbit of the quadric.

    """

    subsets: PositiveInt
    strong: Annotated[tuple[int, ...], Field(repr=False)]
    structural: Annotated[tuple[int, ...], Field(repr=False)]
    quadrics: Annotated[tuple[int, ...], Field(repr=False)]

    @property
    def coincide(self) -> bool:
        """Whether the three classifications select the same sets."""
        return set(self.strong) == set(self.structural) == set(self.quadrics)


def gl_order(k: int, q: int) -> int:
    """Return the order of GL(k, q)."""
    return prod(q**k - q**i for i in range(k))


def _column_ints(matrix: tuple[tuple[int, ...], ...]) -> list[int]:
    k = len(matrix)
    return [
        sum(matrix[i][j] << (k - 1 - i) for i in range(k)) for j in range(k)
    ]


def _rows(columns: tuple[int, ...], k: int) -> tuple[tuple[int, ...], ...]:
    return tuple(
        tuple(columns[j] >> (k - 1 - i) & 1 for j in range(k)) for i in range(k)
    )


def _matrices(k: int) -> Iterator[tuple[int, ...]]:
    """Yield the columns of every invertible binary matrix.

    Column j ranges over the vectors outside the span of columns 0..j-1, in
    increasing integer order.
    """

    def extend(columns: tuple[int, ...], spanned: frozenset[int]) -> Iterator:
        if len(columns) == k:
            yield columns
            return
        for v in range(1, 1 << k):
            if v not in spanned:
                yield from extend(
                    (*columns, v),
                    spanned | {s ^ v for s in spanned},
                )

    yield from extend((), frozenset({0}))


def _permutation(columns: tuple[int, ...], geometry: Geometry) -> tuple[int, ...]:
    k = geometry.k
    image = [0] * (1 << k)
    for v in range(1, 1 << k):
        low = (v & -v).bit_length() - 1
        image[v] = image[v & (v - 1)] ^ columns[k - 1 - low]
    lookup = {v: i for i, v in enumerate(geometry.vectors)}
    return tuple(lookup[image[v]] for v in geometry.vectors)


def _check_binary_group(k: int, q: int, budgets: Budgets) -> int:
    if q != 2:  # noqa: PLR2004
        msg = f"Group actions are implemented for q = 2, got q = {q}."
        logger.error(msg)
        raise PreconditionError(message=msg)
    order = gl_order(k, q)
    require("group", order, budgets.group)
    return order


def group_elements(
    k: int,
    q: int = 2,
    *,
    budgets: Budgets | None = None,
) -> Iterator[GroupElement]:
    """Stream every element of GL(k, 2) with its induced point permutation.

    Args:
        k (int): Dimension of the underlying vector space.
        q (int): Field order; only 2 is supported.
        budgets (Budgets | None): Caps; the group order must not exceed
            `budgets.group`.

    Yields:
        out (GroupElement): Each invertible matrix exactly once.

    Raises:
        PreconditionError: If `q != 2`.
        BudgetExceededError: If the group order exceeds the budget, or the image
            table of order times 2^k entries exceeds `budgets.group_table`.

    """
    budgets = budgets or Budgets.from_env()
    order = _check_binary_group(k, q, budgets)
    geometry = build_geometry(k, q, budgets=budgets)
    logger.info("Enumerating %d elements of GL(%d,%d).", order, k, q)
    for columns in _matrices(k):
        yield GroupElement(
            matrix=_rows(columns, k),
            permutation=_permutation(columns, geometry),
        )


@binary
def build_group(geometry: Geometry, *, budgets: Budgets | None = None) -> Group:
    """Build the permutation tables of GL(k, 2) acting on PG(k-1, 2).

    Tables are cached per dimension, so repeated calls share one instance.

    Raises:
        GeometryMismatchError: If the geometry is not over GF(2).
        BudgetExceededError: If the group order exceeds the budget, or the image
            table of order times 2^k entries exceeds `budgets.group_table`.

    """
    budgets = budgets or Budgets.from_env()
    order = _check_binary_group(geometry.k, geometry.q, budgets)
    require(
        "group table",
        order * (1 << geometry.k),
        budgets.group_table,
        hint="Stream elements with group_elements instead.",
    )
    return _build_group(geometry.k)


@cache
def _build_group(k: int) -> Group:
    geometry = build_geometry(k, 2)
    columns = np.array(list(_matrices(k)), dtype=np.int64)
    by_bit = columns[:, ::-1]

    image = np.zeros((columns.shape[0], 1 << k), dtype=np.int64)
    for v in range(1, 1 << k):
        low = (v & -v).bit_length() - 1
        image[:, v] = image[:, v & (v - 1)] ^ by_bit[:, low]

    lookup = np.zeros(1 << k, dtype=np.int64)
    vectors = np.array(geometry.vectors, dtype=np.int64)
    lookup[vectors] = np.arange(len(vectors))
    permutations = lookup[image[:, vectors]]

    group = Group(geometry=geometry, columns=columns, permutations=permutations)
    logger.info("Built GL(%d,2) with %d elements.", k, group.order)
    return group


def apply(element: GroupElement, points: PointSet) -> PointSet:
    """Return the image of a point set under a group element.

    Raises:
        GeometryMismatchError: If the element acts on another space.

    """
    geometry = points.geometry
    if len(element.permutation) != len(geometry.points):
        raise GeometryMismatchError(
            expected=f"{len(geometry.points)} point images",
            actual=f"{len(element.permutation)} point images",
        )
    return geometry.pointset(element.permutation[i] for i in points.indices)


def orbit(points: PointSet, group: Group) -> frozenset[int]:
    """Return the orbit of a point set as a set of masks."""
    group.check(points)
    return frozenset(int(m) for m in np.unique(group.images(points.mask)))


def canonical_form(points: PointSet, group: Group) -> PointSet:
    """Return the image of a point set with the smallest mask.

    Two sets have the same canonical form exactly when they lie in the same
    orbit.
    """
    group.check(points)
    return points.geometry.pointset(int(group.images(points.mask).min()))


def stabilizer_order(points: PointSet, group: Group) -> int:
    """Return the number of group elements fixing a point set setwise."""
    group.check(points)
    return int((group.images(points.mask) == np.uint64(points.mask)).sum())


def _signature(mask: int, hyperplanes: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sorted(((mask & h).bit_count() for h in hyperplanes), reverse=True))


def intersection_signature(points: PointSet) -> tuple[int, ...]:
    """Return the sizes |S ∩ H| over all hyperplanes H, in descending order.

    The signature is invariant under the group action.
    """
    return _signature(points.mask, points.geometry.point_in_hyperplane)


def _bucket_range(
    n: int,
    size: int,
    start: int,
    stop: int,
    hyperplanes: tuple[int, ...],
) -> dict[tuple[int, ...], list[int]]:
    buckets: dict[tuple[int, ...], list[int]] = defaultdict(list)
    for mask in subset_masks(n, size, start, stop):
        buckets[_signature(mask, hyperplanes)].append(mask)
    return buckets


def _buckets(
    geometry: Geometry,
    size: int,
    workers: int,
    progress: Progress | None,
) -> dict[tuple[int, ...], list[int]]:
    n = len(geometry.points)
    total = comb(n, size)
    units = partition(total, max(workers, -(-total // UNIT)))
    incidence = geometry.point_in_hyperplane
    args = [(n, size, start, stop, incidence) for start, stop in units]

    merged: dict[tuple[int, ...], list[int]] = defaultdict(list)
    done = 0

    def merge(buckets: dict[tuple[int, ...], list[int]], stop: int) -> None:
        nonlocal done
        for signature, masks in buckets.items():
            merged[signature].extend(masks)
        done = stop
        if progress is not None:
            progress(done, total)

    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            results = executor.map(_bucket_range, *zip(*args, strict=True))
            for buckets, (_, stop) in zip(results, units, strict=True):
                merge(buckets, stop)
    else:
        for arg, (_, stop) in zip(args, units, strict=True):
            merge(_bucket_range(*arg), stop)
    return merged


@binary
def classify_subsets(
    geometry: Geometry,
    size: int,
    group: Group | None = None,
    *,
    workers: int = 1,
    progress: Progress | None = None,
    budgets: Budgets | None = None,
) -> list[OrbitReport]:
    """Partition all subsets of a given size into orbits.

    Subsets are first bucketed by intersection signature, then each bucket is
    split into orbits by sweeping its smallest remaining mask. Rank ranges
    are split among workers; the result does not depend on their number.

    Args:
        geometry (Geometry): PG(k-1, 2).
        size (int): Subset size.
        group (Group | None): The acting group; built when omitted.
        workers (int): Number of processes used for bucketing.
        progress (Progress | None): Called with the number of subsets
            bucketed so far.
        budgets (Budgets | None): Caps; `C(n, size)` must not exceed
            `budgets.subsets`.

    Returns:
        out (list[OrbitReport]): Orbits by descending size, ties broken by
            signature.

    Raises:
        GeometryMismatchError: If the geometry is not over GF(2).
        BudgetExceededError: If there are too many subsets.

    Examples:
        ```python
        from strong_blocking_sets import build_geometry, classify_subsets

        pg = build_geometry(4, 2)
        print([r.orbit_size for r in classify_subsets(pg, 9)])
        # [2520, 1680, 420, 280, 105]
        ```

    """
    budgets = budgets or Budgets.from_env()
    n = len(geometry.points)
    if not 0 <= size <= n:
        msg = f"Subset size {size} is outside [0, {n}]."
        raise InputValidationError(error=ValueError(msg))
    require("subsets", comb(n, size), budgets.subsets)
    group = group or build_group(geometry, budgets=budgets)
    logger.info(
        "Classifying %d subsets of size %d of %s.",
        comb(n, size),
        size,
        geometry.name,
    )

    reports: list[OrbitReport] = []
    for signature, masks in sorted(_buckets(geometry, size, workers, progress).items()):
        remaining = set(masks)
        while remaining:
            representative = min(remaining)
            images = group.images(representative)
            found = {int(m) for m in np.unique(images)}
            remaining -= found
            reports.append(
                OrbitReport(
                    representative=geometry.pointset(representative),
                    orbit_size=len(found),
                    stabilizer_order=int((images == np.uint64(representative)).sum()),
                    group_order=group.order,
                    signature=signature,
                    is_strong=is_strong_mask(geometry, representative),
                ),
            )
    reports.sort(key=lambda r: (-r.orbit_size, r.signature))
    logger.info("Found %d orbits.", len(reports))
    return reports


@projective_space(4, 2)
def remark_witnesses(geometry: Geometry) -> dict[Configuration, PointSet]:
    """Construct one explicit nine-point set per configuration of PG(3, 2).

    The planes and points used are the first ones in canonical order that
    satisfy each description.

    Raises:
        GeometryMismatchError: If the geometry is not PG(3, 2).

    """
    plane = geometry.hyperplanes[0].mask
    on_plane = list(iter_bits(plane))
    off_plane = list(iter_bits(geometry.full & ~plane))
    puncture = on_plane[0]

    def triple(through_puncture: bool) -> int:
        line = next(
            ln.mask
            for ln in geometry.lines
            if ln.mask & plane == ln.mask
            and bool(ln.mask >> puncture & 1) == through_puncture
        )
        other = next(
            h.mask
            for h in geometry.hyperplanes
            if h.mask != plane and h.mask & line == line
        )
        return geometry.mask_of(list(iter_bits(other & ~plane))[:3])

    punctured = punctured_plane(geometry, 0, puncture).mask
    return {
        Configuration.QUADRIC: hyperbolic_quadric(geometry),
        Configuration.POINT_AND_PLANE_COMPLEMENT: geometry.pointset(
            plane_complement(geometry, 0).mask | 1 << puncture,
        ),
        Configuration.PLANE_AND_TWO_POINTS: geometry.pointset(
            plane | geometry.mask_of(off_plane[:2]),
        ),
        Configuration.PUNCTURED_PLANE_OFF_LINE: geometry.pointset(
            punctured | triple(through_puncture=False),
        ),
        Configuration.PUNCTURED_PLANE_ON_LINE: geometry.pointset(
            punctured | triple(through_puncture=True),
        ),
    }


@projective_space(4, 2)
def punctured_plane_census(geometry: Geometry) -> PuncturedPlaneCensus:
    """Count punctured planes plus three points off the plane.

    Every choice of plane π, point P on π and three points off π is counted,
    split by whether P lies on the line ℓ where the plane of the three points
    meets π. Sets with P off ℓ arise twice, once from each of their two
    six-point planes.

    Raises:
        GeometryMismatchError: If the geometry is not PG(3, 2).

    """
    off_line: set[int] = set()
    on_line: set[int] = set()
    raw_off = raw_on = 0
    for plane in geometry.point_in_hyperplane:
        outside = list(iter_bits(geometry.full & ~plane))
        for point in iter_bits(plane):
            punctured = plane & ~(1 << point)
            for chosen in combinations(outside, 3):
                triple = geometry.mask_of(chosen)
                line = geometry.closure(triple) & plane
                mask = punctured | triple
                if line >> point & 1:
                    raw_on += 1
                    on_line.add(mask)
                else:
                    raw_off += 1
                    off_line.add(mask)

    census = PuncturedPlaneCensus(
        raw=raw_off + raw_on,
        raw_off_line=raw_off,
        raw_on_line=raw_on,
        off_line=tuple(sorted(off_line)),
        on_line=tuple(sorted(on_line)),
    )
    logger.info(
        "Punctured-plane census: %d raw, %d + %d split, %d + %d distinct.",
        census.raw,
        census.raw_off_line,
        census.raw_on_line,
        len(census.off_line),
        len(census.on_line),
    )
    return census


@projective_space(4, 2)
def line_pair_census(geometry: Geometry) -> LinePairCensus:
    """Count sets made of a line and two of its planes, each minus a point.

    For every line ℓ and every pair of planes through ℓ, one point off ℓ is
    dropped from each plane.

    Raises:
        GeometryMismatchError: If the geometry is not PG(3, 2).

    """
    masks: set[int] = set()
    raw = 0
    for line in geometry.lines:
        planes = [
            h.mask for h in geometry.hyperplanes if h.mask & line.mask == line.mask
        ]
        for first, second in combinations(planes, 2):
            for a in iter_bits(first & ~line.mask):
                for b in iter_bits(second & ~line.mask):
                    raw += 1
                    masks.add((first | second) & ~(1 << a) & ~(1 << b))
    census = LinePairCensus(raw=raw, masks=tuple(sorted(masks)))
    logger.info("Line-pair census: %d raw, %d distinct.", raw, len(census.masks))
    return census


@projective_space(4, 2)
def check_main_theorem(
    geometry: Geometry,
    group: Group | None = None,
    *,
    budgets: Budgets | None = None,
) -> TheoremReport:
    """Classify all nine-point sets of PG(3, 2) in three independent ways.

    The three classifications are: the strong blocking sets, the sets passing
    both structural checks, and the orbit of the hyperbolic quadric.

    Raises:
        GeometryMismatchError: If the geometry is not PG(3, 2).

    """
    group = group or build_group(geometry, budgets=budgets)
    n = len(geometry.points)
    strong: list[int] = []
    structural: list[int] = []
    for mask in subset_masks(n, QUADRIC_SIZE):
        points = geometry.pointset(mask)
        if is_strong_mask(geometry, mask):
            strong.append(mask)
        if check_plane_sections(points).holds and check_contained_lines(points).holds:
            structural.append(mask)
    quadrics = orbit(hyperbolic_quadric(geometry), group)

    report = TheoremReport(
        subsets=comb(n, QUADRIC_SIZE),
        strong=tuple(sorted(strong)),
        structural=tuple(sorted(structural)),
        quadrics=tuple(sorted(quadrics)),
    )
    logger.info(
        "Nine-point sets: %d strong, %d structural, %d quadrics; %s.",
        len(report.strong),
        len(report.structural),
        len(report.quadrics),
        "coincide" if report.coincide else "differ",
    )
    return report
