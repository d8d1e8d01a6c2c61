"""Projective spaces over prime fields.

This submodule builds PG(k-1, q) for prime q with full incidence tables:
points in canonical order, lines, hyperplanes and bitmasks of their member
points. It defines the `PointSet` model shared by every other module and the
quadric constructors used as reference configurations.

Exports:
    ProjPoint: Model representing a normalized projective point.
    Subspace: Model representing a projective subspace.
    Geometry: Model representing a built projective space.
    PointSet: Model representing a subset of the points of a geometry.
    build_geometry: Builds (or returns the cached) PG(k-1, q).
    span: Smallest subspace containing a point set.
    pencil_through: Hyperplanes containing a subspace.
    lines_through: Lines through a point.
    hyperbolic_quadric: Hyperbolic quadric of PG(3, 2).
    parabolic_quadric: Parabolic quadric of PG(4, 2).
    quadric_rulings: The two reguli of the hyperbolic quadric.
    plane_complement: Points off a hyperplane.
    punctured_plane: Hyperplane minus one of its points.
"""

from __future__ import annotations

import logging
from functools import cache, cached_property
from itertools import product
from typing import TYPE_CHECKING, Annotated, Any, Self

from pydantic import (
    Field,
    NonNegativeInt,
    PositiveInt,
    SkipValidation,
    model_serializer,
    model_validator,
)

from .budgets import Budgets
from .errors import (
    EmptySpanError,
    GeometryCapError,
    GeometryMismatchError,
    InputValidationError,
    PreconditionError,
)
from .field import Basis, BinaryBasis, FieldElement, check_field, rank_gf
from .schemas import LockedModel
from .utils import projective_space

if TYPE_CHECKING:
    from collections.abc import Callable, Iterable, Sequence


logger: logging.Logger = logging.getLogger(__name__)


__all__: list[str] = [
    "Geometry",
    "PointSet",
    "ProjPoint",
    "Subspace",
    "build_geometry",
    "hyperbolic_quadric",
    "lines_through",
    "parabolic_quadric",
    "pencil_through",
    "plane_complement",
    "punctured_plane",
    "quadric_rulings",
    "span",
]


def count_points(k: int, q: int) -> int:
    """Return the number of points of PG(k-1, q)."""
    return (q**k - 1) // (q - 1)


def iter_bits(mask: int) -> Iterable[int]:
    """Yield the indices of the set bits of a mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class ProjPoint(LockedModel):
    """Projective point.

    Represents a point of PG(k-1, q) by its normalized coordinate vector, in
    which the first nonzero coordinate equals 1, together with its position
    in the canonical (lexicographic) point order of its geometry.

    Attributes:
        coords (tuple[int, ...]): Normalized coordinates over GF(q).
        index (NonNegativeInt): Position in the geometry's point order.
        q (PositiveInt): Field order.

    """

    coords: Annotated[
        tuple[int, ...],
        Field(
            title="Coordinates",
            description="Normalized coordinate vector over GF(q).",
            min_length=1,
        ),
    ]
    index: Annotated[
        NonNegativeInt,
        Field(
            title="Index",
            description="Position in the canonical point order.",
        ),
    ]
    q: Annotated[
        PositiveInt,
        Field(
            title="Order",
            description="Field order.",
        ),
    ]

    @model_validator(mode="after")
    def check_normalized(self) -> Self:
        """Ensure the coordinates are in range and normalized.

        Raises:
            InputValidationError: If the vector is zero, has entries outside
                `[0, q)`, or its first nonzero entry is not 1.

        """
        if any(not 0 <= c < self.q for c in self.coords):
            msg = f"Coordinates {self.coords} are outside GF({self.q})."
            raise InputValidationError(error=ValueError(msg))
        if self.normalize(self.coords, self.q) != self.coords:
            msg = f"Coordinates {self.coords} are not normalized."
            raise InputValidationError(error=ValueError(msg))
        return self

    @staticmethod
    def normalize(coords: Sequence[int], q: int) -> tuple[int, ...]:
        """Scale a nonzero vector so that its first nonzero entry is 1.

        Args:
            coords (Sequence[int]): Any nonzero vector over GF(q); entries are
                reduced modulo q.
            q (int): Prime field order.

        Returns:
            out (tuple[int, ...]): The normalized representative.

        Raises:
            InputValidationError: If the vector is zero.

        """
        reduced = [c % q for c in coords]
        lead = next((c for c in reduced if c), 0)
        if not lead:
            msg = "The zero vector is not a projective point."
            raise InputValidationError(error=ValueError(msg))
        scale = FieldElement(value=lead, q=q).inverse().value
        return tuple((c * scale) % q for c in reduced)


class Subspace(LockedModel):
    """Projective subspace.

    Represents a subspace of PG(k-1, q) by a reduced row echelon basis of the
    underlying vector subspace and the bitmask of its member points.

    Attributes:
        basis (tuple[tuple[int, ...], ...]): Reduced row echelon basis.
        dimension (NonNegativeInt): Projective dimension (0 point, 1 line).
        mask (NonNegativeInt): Bitmask over the geometry's point indices.
        q (PositiveInt): Field order.

    """

    basis: Annotated[
        tuple[tuple[int, ...], ...],
        Field(
            title="Basis",
            description="Reduced row echelon basis of the vector subspace.",
            min_length=1,
        ),
    ]
    dimension: Annotated[
        NonNegativeInt,
        Field(
            title="Dimension",
            description="Projective dimension of the subspace.",
        ),
    ]
    mask: Annotated[
        NonNegativeInt,
        Field(
            title="Mask",
            description="Bitmask of the member points.",
        ),
    ]
    q: Annotated[
        PositiveInt,
        Field(
            title="Order",
            description="Field order.",
        ),
    ]

    @model_validator(mode="after")
    def check_size(self) -> Self:
        """Ensure rank and member count agree with the dimension.

        Raises:
            InputValidationError: If the basis has the wrong number of rows or
                the mask the wrong number of points.

        """
        if len(self.basis) != self.dimension + 1:
            msg = (
                f"Basis of {len(self.basis)} rows cannot span a subspace of "
                f"dimension {self.dimension}."
            )
            raise InputValidationError(error=ValueError(msg))
        if self.mask.bit_count() != count_points(self.dimension + 1, self.q):
            msg = (
                f"Subspace of dimension {self.dimension} must have "
                f"{count_points(self.dimension + 1, self.q)} points, mask has "
                f"{self.mask.bit_count()}."
            )
            raise InputValidationError(error=ValueError(msg))
        return self

    @property
    def size(self) -> int:
        """Number of member points."""
        return self.mask.bit_count()

    def __contains__(self, index: object) -> bool:
        """Check whether a point index is a member."""
        return isinstance(index, int) and index >= 0 and bool(self.mask >> index & 1)


class Geometry(LockedModel):
    """Projective space PG(k-1, q).

    Represents the incidence structure of points, lines and hyperplanes of a
    projective space over a prime field. Points are ordered lexicographically
    on their normalized coordinates; hyperplanes are ordered the same way on
    their normalized dual coordinates. All tables are computed once by
    `build_geometry()` and are read-only afterwards, so one instance may be
    shared by any number of workers.

    Attributes:
        k (PositiveInt): Dimension of the underlying vector space.
        q (PositiveInt): Prime field order.
        points (tuple[ProjPoint, ...]): Points in canonical order.
        lines (tuple[Subspace, ...]): All lines.
        hyperplanes (tuple[Subspace, ...]): All hyperplanes.

    Examples:
        ```python
        from strong_blocking_sets import build_geometry

        pg = build_geometry(4, 2)
        print(len(pg.points), len(pg.lines), len(pg.hyperplanes))
        ```

    """

    k: Annotated[
        PositiveInt,
        Field(
            title="k",
            description="Dimension of the underlying vector space.",
            ge=2,
        ),
    ]
    q: Annotated[
        PositiveInt,
        Field(
            title="q",
            description="Prime field order.",
        ),
    ]
    points: Annotated[
        tuple[ProjPoint, ...],
        Field(
            title="Points",
            description="Points in canonical order.",
            repr=False,
        ),
    ]
    lines: Annotated[
        tuple[Subspace, ...],
        Field(
            title="Lines",
            description="All lines of the space.",
            repr=False,
        ),
    ]
    hyperplanes: Annotated[
        tuple[Subspace, ...],
        Field(
            title="Hyperplanes",
            description="All hyperplanes, ordered by dual coordinates.",
            repr=False,
        ),
    ]

    @model_validator(mode="after")
    def check_counts(self) -> Self:
        """Ensure point and hyperplane counts agree with (q^k - 1)/(q - 1)."""
        expected = count_points(self.k, self.q)
        if len(self.points) != expected or len(self.hyperplanes) != expected:
            msg = (
                f"PG({self.k - 1},{self.q}) needs {expected} points and "
                f"hyperplanes, got {len(self.points)} and "
                f"{len(self.hyperplanes)}."
            )
            raise InputValidationError(error=ValueError(msg))
        return self

    @property
    def name(self) -> str:
        """Conventional name, e.g. `PG(3,2)`."""
        return f"PG({self.k - 1},{self.q})"

    @cached_property
    def full(self) -> int:
        """Mask of all points."""
        return (1 << len(self.points)) - 1

    @cached_property
    def index(self) -> dict[tuple[int, ...], int]:
        """Map from normalized coordinates to point index."""
        return {p.coords: p.index for p in self.points}

    @cached_property
    def vectors(self) -> tuple[Any, ...]:
        """Per-point vectors in the form used by the echelon bases.

        Over GF(2) these are integers (coordinate 0 is the most significant
        bit); otherwise coordinate tuples.
        """
        if self.q == 2:  # noqa: PLR2004
            return tuple(
                int("".join(map(str, p.coords)), 2) for p in self.points
            )
        return tuple(p.coords for p in self.points)

    @cached_property
    def point_in_hyperplane(self) -> tuple[int, ...]:
        """Per-hyperplane bitmask of member points."""
        return tuple(h.mask for h in self.hyperplanes)

    @cached_property
    def hyperplanes_on_point(self) -> tuple[tuple[int, ...], ...]:
        """Per-point indices of the hyperplanes through it."""
        return tuple(
            tuple(j for j, h in enumerate(self.hyperplanes) if h.mask >> i & 1)
            for i in range(len(self.points))
        )

    @cached_property
    def lines_on_point(self) -> tuple[tuple[int, ...], ...]:
        """Per-point indices of the lines through it."""
        return tuple(
            tuple(j for j, ln in enumerate(self.lines) if ln.mask >> i & 1)
            for i in range(len(self.points))
        )

    def basis(self) -> Basis | BinaryBasis:
        """Return an empty echelon basis matching `vectors`."""
        return BinaryBasis() if self.q == 2 else Basis(self.q)  # noqa: PLR2004

    def index_of(self, coords: Sequence[int]) -> int:
        """Return the index of the point with the given coordinates.

        Args:
            coords (Sequence[int]): Any nonzero multiple of the point.

        Raises:
            GeometryMismatchError: If the vector has the wrong length.
            InputValidationError: If the vector is zero.

        """
        if len(coords) != self.k:
            raise GeometryMismatchError(
                expected=f"{self.k} coordinates",
                actual=f"{len(coords)} coordinates",
            )
        return self.index[ProjPoint.normalize(coords, self.q)]

    def mask_of(self, indices: Iterable[int]) -> int:
        """Return the bitmask of a collection of point indices."""
        mask = 0
        for i in indices:
            if not 0 <= i < len(self.points):
                msg = f"Point index {i} is outside {self.name}."
                raise InputValidationError(error=IndexError(msg))
            mask |= 1 << i
        return mask

    def pointset(self, items: Iterable[int | Sequence[int]] | int) -> PointSet:
        """Build a point set from indices, coordinate vectors, or a mask.

        Args:
            items (Iterable[int | Sequence[int]] | int): A bitmask, or an
                iterable mixing point indices and coordinate vectors.

        Returns:
            out (PointSet): The point set in this geometry.

        """
        if isinstance(items, int):
            return PointSet(geometry=self, mask=items)
        indices = [
            item if isinstance(item, int) else self.index_of(item)
            for item in items
        ]
        return PointSet(geometry=self, mask=self.mask_of(indices))

    def rank(self, mask: int, stop: int | None = None) -> int:
        """Return the vector rank of a set of points.

        Args:
            mask (int): Bitmask of the points.
            stop (int | None): Return early once this rank is reached.

        """
        basis = self.basis()
        vectors = self.vectors
        for i in iter_bits(mask):
            if basis.add(vectors[i]) and basis.rank == stop:
                break
        return basis.rank

    def closure(self, mask: int) -> int:
        """Return the mask of the subspace spanned by a set of points."""
        basis = self.basis()
        vectors = self.vectors
        for i in iter_bits(mask):
            basis.add(vectors[i])
        closed = 0
        for i, vector in enumerate(vectors):
            if basis.contains(vector):
                closed |= 1 << i
        return closed

    def subspace(self, mask: int) -> Subspace:
        """Return the subspace spanned by a nonempty set of points.

        Raises:
            EmptySpanError: If the mask is empty.

        """
        if not mask:
            raise EmptySpanError
        echelon = rank_gf([self.points[i].coords for i in iter_bits(mask)], self.q)
        return Subspace(
            basis=echelon.basis,
            dimension=echelon.rank - 1,
            mask=self.closure(mask),
            q=self.q,
        )

    def owns(self, sub: Subspace) -> bool:
        """Check whether a subspace is consistent with this geometry."""
        return (
            sub.q == self.q
            and all(len(row) == self.k for row in sub.basis)
            and sub.mask >> len(self.points) == 0
            and self.closure(sub.mask) == sub.mask
            and self.rank(sub.mask) == sub.dimension + 1
        )

    def sections(self, mask: int) -> tuple[int, ...]:
        """Return |S ∩ H| for every hyperplane H, in hyperplane order."""
        return tuple((mask & h).bit_count() for h in self.point_in_hyperplane)

    def line_through(self, a: int, b: int) -> Subspace:
        """Return the unique line through two distinct points.

        Raises:
            PreconditionError: If the points coincide.

        """
        if a == b:
            raise PreconditionError(message="A line needs two distinct points.")
        for j in self.lines_on_point[a]:
            if self.lines[j].mask >> b & 1:
                return self.lines[j]
        msg = f"No line through points {a} and {b}."
        raise PreconditionError(message=msg)

    def contained_lines(self, mask: int) -> tuple[int, ...]:
        """Return the indices of the lines entirely inside a set of points."""
        return tuple(
            j for j, ln in enumerate(self.lines) if ln.mask & mask == ln.mask
        )


class PointSet(LockedModel):
    """Set of points of a projective space.

    Represents a subset of the points of a built geometry as a bitmask over
    point indices. Point sets compare equal when they live in the same
    PG(k-1, q) and have the same members; they serialize to their
    coordinates rather than to the whole geometry.

    Attributes:
        geometry (Geometry): The ambient projective space.
        mask (NonNegativeInt): Bitmask over point indices.

    Examples:
        ```python
        from strong_blocking_sets import build_geometry, hyperbolic_quadric

        pg = build_geometry(4, 2)
        quadric = hyperbolic_quadric(pg)
        print(len(quadric), quadric.indices)
        ```

    """

    geometry: Annotated[
        SkipValidation[Geometry],
        Field(
            title="Geometry",
            description="The ambient projective space.",
            repr=False,
        ),
    ]
    mask: Annotated[
        NonNegativeInt,
        Field(
            title="Mask",
            description="Bitmask over point indices.",
        ),
    ]

    @model_validator(mode="after")
    def check_mask(self) -> Self:
        """Ensure the mask only uses bits below the number of points."""
        if self.mask >> len(self.geometry.points):
            msg = f"Mask {self.mask:#x} has bits outside {self.geometry.name}."
            raise InputValidationError(error=ValueError(msg))
        return self

    @model_serializer(mode="plain")
    def serialize(self) -> dict[str, Any]:
        """Serialize as `k`, `q` and the list of point coordinates."""
        return {
            "k": self.geometry.k,
            "q": self.geometry.q,
            "points": [list(c) for c in self.coords],
        }

    @property
    def indices(self) -> tuple[int, ...]:
        """Member point indices in increasing order."""
        return tuple(iter_bits(self.mask))

    @property
    def coords(self) -> tuple[tuple[int, ...], ...]:
        """Normalized coordinates of the members, in index order."""
        return tuple(self.geometry.points[i].coords for i in iter_bits(self.mask))

    @property
    def size(self) -> int:
        """Number of points."""
        return self.mask.bit_count()

    def complement(self) -> PointSet:
        """Return the set of points not in this set."""
        return PointSet(geometry=self.geometry, mask=self.geometry.full ^ self.mask)

    def issubset(self, other: PointSet) -> bool:
        """Check inclusion in another point set of the same geometry."""
        self._check_same(other)
        return self.mask & other.mask == self.mask

    def _check_same(self, other: PointSet) -> None:
        mine = (self.geometry.k, self.geometry.q)
        theirs = (other.geometry.k, other.geometry.q)
        if mine != theirs:
            raise GeometryMismatchError(expected=mine, actual=theirs)

    def __len__(self) -> int:
        """Number of points."""
        return self.size

    def __contains__(self, index: object) -> bool:
        """Check whether a point index is a member."""
        return isinstance(index, int) and index >= 0 and bool(self.mask >> index & 1)

    def __or__(self, other: PointSet) -> PointSet:
        """Union."""
        self._check_same(other)
        return PointSet(geometry=self.geometry, mask=self.mask | other.mask)

    def __and__(self, other: PointSet) -> PointSet:
        """Intersection."""
        self._check_same(other)
        return PointSet(geometry=self.geometry, mask=self.mask & other.mask)

    def __sub__(self, other: PointSet) -> PointSet:
        """Difference."""
        self._check_same(other)
        return PointSet(geometry=self.geometry, mask=self.mask & ~other.mask)

    def __eq__(self, other: object) -> bool:
        """Compare by ambient (k, q) and members."""
        if not isinstance(other, PointSet):
            return NotImplemented
        return (self.geometry.k, self.geometry.q, self.mask) == (
            other.geometry.k,
            other.geometry.q,
            other.mask,
        )

    def __hash__(self) -> int:
        """Hash by ambient (k, q) and members."""
        return hash((self.geometry.k, self.geometry.q, self.mask))


def build_geometry(k: int, q: int, *, budgets: Budgets | None = None) -> Geometry:
    """Build the projective space PG(k-1, q).

    Tables are cached per `(k, q)`, so repeated calls return the same
    instance.

    Args:
        k (int): Dimension of the underlying vector space, `2 <= k`.
        q (int): Prime field order.
        budgets (Budgets | None): Caps on `k`, `q` and the number of points;
            defaults to `Budgets.from_env()`.

    Returns:
        out (Geometry): The built space.

    Raises:
        FieldError: If `q` is not prime or above the cap.
        GeometryCapError: If `k` or the number of points is above the cap.
        InputValidationError: If `k < 2`.

    """
    budgets = budgets or Budgets.from_env()
    check_field(q, budgets.max_q)
    if k < 2:  # noqa: PLR2004
        msg = f"A projective space needs k >= 2, got k = {k}."
        raise InputValidationError(error=ValueError(msg))
    points = count_points(k, q)
    if k > budgets.max_k:
        raise GeometryCapError(k, q, k, budgets.max_k, quantity="dimension")
    if points > budgets.max_points:
        raise GeometryCapError(k, q, points, budgets.max_points)
    return _build(k, q)


@cache
def _build(k: int, q: int) -> Geometry:
    logger.info("Building PG(%d,%d).", k - 1, q)

    coords = [
        v for v in product(range(q), repeat=k) if next((c for c in v if c), 0) == 1
    ]
    points = tuple(
        ProjPoint(coords=c, index=i, q=q) for i, c in enumerate(coords)
    )
    index = {c: i for i, c in enumerate(coords)}

    def combine(lam: int, x: Sequence[int], y: Sequence[int]) -> list[int]:
        return [(lam * a + b) % q for a, b in zip(x, y, strict=True)]

    lines: list[Subspace] = []
    covered = [1 << i for i in range(len(coords))]
    for a in range(len(coords)):
        for b in range(a + 1, len(coords)):
            if covered[a] >> b & 1:
                continue
            members = {a} | {
                index[ProjPoint.normalize(combine(lam, coords[a], coords[b]), q)]
                for lam in range(q)
            }
            mask = sum(1 << i for i in members)
            for i in members:
                covered[i] |= mask
            basis = rank_gf([coords[a], coords[b]], q).basis
            lines.append(Subspace(basis=basis, dimension=1, mask=mask, q=q))

    hyperplanes: list[Subspace] = []
    for dual in coords:
        mask = sum(
            1 << i
            for i, c in enumerate(coords)
            if sum(x * y for x, y in zip(dual, c, strict=True)) % q == 0
        )
        rows = [coords[i] for i in range(len(coords)) if mask >> i & 1]
        basis = rank_gf(rows, q).basis
        hyperplanes.append(
            Subspace(basis=basis, dimension=k - 2, mask=mask, q=q),
        )

    geometry = Geometry(
        k=k,
        q=q,
        points=points,
        lines=tuple(lines),
        hyperplanes=tuple(hyperplanes),
    )
    logger.info(
        "Built %s with %d points, %d lines and %d hyperplanes.",
        geometry.name,
        len(points),
        len(lines),
        len(hyperplanes),
    )
    return geometry


def span(points: PointSet) -> Subspace:
    """Return the smallest subspace containing a point set.

    Args:
        points (PointSet): Nonempty point set.

    Returns:
        out (Subspace): The span, with its full member mask.

    Raises:
        EmptySpanError: If the point set is empty.

    """
    return points.geometry.subspace(points.mask)


def _check_owned(sub: Subspace, geometry: Geometry) -> None:
    if not geometry.owns(sub):
        logger.error("Subspace %s does not belong to %s.", sub, geometry.name)
        raise GeometryMismatchError(
            expected=f"a subspace of {geometry.name}",
            actual=f"subspace with mask {sub.mask:#x}",
        )


def pencil_through(sub: Subspace, geometry: Geometry) -> tuple[Subspace, ...]:
    """Return the hyperplanes containing a subspace, in hyperplane order.

    Raises:
        GeometryMismatchError: If the subspace is not one of `geometry`.

    """
    _check_owned(sub, geometry)
    return tuple(h for h in geometry.hyperplanes if h.mask & sub.mask == sub.mask)


def lines_through(point: int, geometry: Geometry) -> tuple[Subspace, ...]:
    """Return the lines through a point, in line order.

    Raises:
        GeometryMismatchError: If the index is not a point of `geometry`.

    """
    if not 0 <= point < len(geometry.points):
        raise GeometryMismatchError(
            expected=f"a point of {geometry.name}",
            actual=f"index {point}",
        )
    return tuple(geometry.lines[j] for j in geometry.lines_on_point[point])


def zero_set(geometry: Geometry, form: Callable[[tuple[int, ...]], int]) -> PointSet:
    """Return the points on which a form vanishes modulo q."""
    return geometry.pointset(
        p.index for p in geometry.points if form(p.coords) % geometry.q == 0
    )


@projective_space(4, 2)
def hyperbolic_quadric(geometry: Geometry) -> PointSet:
    """Return the hyperbolic quadric x0*x1 + x2*x3 = 0 of PG(3, 2).

    Raises:
        GeometryMismatchError: If `geometry` is not PG(3, 2).

    """
    quadric = zero_set(geometry, lambda x: x[0] * x[1] + x[2] * x[3])
    logger.debug("Hyperbolic quadric has %d points.", len(quadric))
    return quadric


@projective_space(5, 2)
def parabolic_quadric(geometry: Geometry) -> PointSet:
    """Return the parabolic quadric x0^2 + x1*x2 + x3*x4 = 0 of PG(4, 2).

    Raises:
        GeometryMismatchError: If `geometry` is not PG(4, 2).

    """
    quadric = zero_set(geometry, lambda x: x[0] ** 2 + x[1] * x[2] + x[3] * x[4])
    logger.debug("Parabolic quadric has %d points.", len(quadric))
    return quadric


@projective_space(4, 2)
def quadric_rulings(
    geometry: Geometry,
    quadric: PointSet | None = None,
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Split the lines of a hyperbolic quadric into its two reguli.

    Args:
        geometry (Geometry): PG(3, 2).
        quadric (PointSet | None): A hyperbolic quadric; defaults to
            `hyperbolic_quadric(geometry)`.

    Returns:
        out (tuple[tuple[int, ...], tuple[int, ...]]): Line indices of the
            regulus through the lowest contained line, then the opposite one.

    Raises:
        PreconditionError: If the set does not carry two reguli of three
            pairwise disjoint lines.

    """
    quadric = quadric or hyperbolic_quadric(geometry)
    contained = geometry.contained_lines(quadric.mask)
    if len(contained) != 6:  # noqa: PLR2004
        msg = f"Expected 6 lines on the quadric, found {len(contained)}."
        raise PreconditionError(message=msg)

    first = contained[0]
    regulus = tuple(
        j
        for j in contained
        if j == first or not geometry.lines[j].mask & geometry.lines[first].mask
    )
    opposite = tuple(j for j in contained if j not in regulus)
    if len(regulus) != 3 or len(opposite) != 3:  # noqa: PLR2004
        msg = "Quadric lines do not split into two reguli of three lines."
        raise PreconditionError(message=msg)
    return regulus, opposite


def _hyperplane(geometry: Geometry, plane: int) -> int:
    if not 0 <= plane < len(geometry.hyperplanes):
        raise GeometryMismatchError(
            expected=f"a hyperplane of {geometry.name}",
            actual=f"index {plane}",
        )
    return geometry.hyperplanes[plane].mask


def plane_complement(geometry: Geometry, plane: int) -> PointSet:
    """Return the points off a hyperplane.

    Raises:
        GeometryMismatchError: If the index is not a hyperplane of `geometry`.

    """
    return geometry.pointset(geometry.full & ~_hyperplane(geometry, plane))


def punctured_plane(geometry: Geometry, plane: int, point: int) -> PointSet:
    """Return a hyperplane with one of its points removed.

    Raises:
        GeometryMismatchError: If the index is not a hyperplane of `geometry`.
        PreconditionError: If the point is not on the hyperplane.

    """
    mask = _hyperplane(geometry, plane)
    if not 0 <= point < len(geometry.points) or not mask >> point & 1:
        msg = f"Point {point} is not on hyperplane {plane} of {geometry.name}."
        raise PreconditionError(message=msg)
    return geometry.pointset(mask & ~(1 << point))
