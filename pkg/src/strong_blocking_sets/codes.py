"""Linear codes and minimal codewords.

This submodule defines linear codes over prime fields by their generator
matrices, enumerates codewords, decides whether codewords and codes are
minimal, and converts between codes and point sets of projective spaces:
the columns of a generator matrix of a non-degenerate code are points of
PG(k-1, q), and the code is minimal exactly when that point set is a strong
blocking set.

Exports:
    LinearCode: Model representing a linear code.
    Codeword: Model representing a codeword with its support and weight.
    Witness: Model representing a non-minimality witness pair.
    MinimalityReport: Model representing a code minimality verdict.
    ColumnPoints: Model representing the point set of a generator matrix.
    enumerate_codewords: Stream all codewords in message order.
    is_minimal_codeword: Decide minimality of one codeword.
    is_minimal_code: Decide minimality of a code, with witnesses.
    weight_distribution: Number of codewords of each weight.
    minimum_distance: Smallest nonzero weight.
    pointset_from_code: Point set of the generator columns.
    code_from_pointset: Code whose generator columns are a point set.
    simplex_code: Code of all points of PG(k-1, q).
    repetition_code: The [n, 1] repetition code.
"""

from __future__ import annotations

import logging
from itertools import product
from typing import TYPE_CHECKING, Annotated, Self

import numpy as np
from pydantic import (
    Field,
    PositiveInt,
    computed_field,
    model_validator,
)

from .budgets import Budgets, require
from .errors import (
    DegenerateCodeError,
    GeometryMismatchError,
    InputValidationError,
    NonSpanningError,
    NotACodewordError,
    PreconditionError,
)
from .field import check_field, field, rank_gf
from .geometry import Geometry, PointSet, ProjPoint, build_geometry
from .schemas import LockedModel

if TYPE_CHECKING:
    from collections.abc import Iterator, Sequence

    import numpy.typing as npt


logger: logging.Logger = logging.getLogger(__name__)


CHUNK: int = 1 << 16


__all__: list[str] = [
    "Codeword",
    "ColumnPoints",
    "LinearCode",
    "MinimalityReport",
    "Witness",
    "code_from_pointset",
    "enumerate_codewords",
    "is_minimal_code",
    "is_minimal_codeword",
    "minimum_distance",
    "pointset_from_code",
    "repetition_code",
    "simplex_code",
    "weight_distribution",
]


class Codeword(LockedModel):
    """Codeword.

    Represents a vector of GF(q)^n together with its Hamming support and
    weight.

    Attributes:
        vector (tuple[int, ...]): Coordinates over GF(q).
        q (PositiveInt): Field order.
        support (tuple[int, ...]): Indices of the nonzero coordinates.
        weight (int): Number of nonzero coordinates.

    """

    vector: Annotated[
        tuple[int, ...],
        Field(
            title="Vector",
            description="Coordinates over GF(q).",
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
    def check_entries(self) -> Self:
        """Ensure all coordinates lie in `[0, q)`."""
        if any(not 0 <= x < self.q for x in self.vector):
            msg = f"Codeword {self.vector} has entries outside GF({self.q})."
            raise InputValidationError(error=ValueError(msg))
        return self

    @computed_field  # type: ignore[prop-decorator]
    @property
    def support(self) -> tuple[int, ...]:
        """Indices of the nonzero coordinates."""
        return tuple(i for i, x in enumerate(self.vector) if x)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def weight(self) -> int:
        """Number of nonzero coordinates."""
        return sum(1 for x in self.vector if x)

    @property
    def support_mask(self) -> int:
        """Bitmask of the support."""
        return sum(1 << i for i, x in enumerate(self.vector) if x)

    def scale(self, factor: int) -> Codeword:
        """Return the scalar multiple `factor * self`."""
        return Codeword(
            vector=tuple((factor * x) % self.q for x in self.vector),
            q=self.q,
        )


class LinearCode(LockedModel):
    """Linear code.

    Represents an [n, k]_q code as the row space of a full-rank k x n
    generator matrix over a prime field. The columns G_1, ..., G_n of the
    generator are the code's points in PG(k-1, q).

    Attributes:
        generator (tuple[tuple[int, ...], ...]): Generator matrix rows.
        q (PositiveInt): Prime field order.

    Examples:
        ```python
        from strong_blocking_sets import LinearCode, is_minimal_code

        code = LinearCode(generator=((1, 1, 0), (0, 0, 1)), q=2)
        print(code.n, code.k, is_minimal_code(code).minimal)  # 3 2 False
        ```

    """

    generator: Annotated[
        tuple[tuple[int, ...], ...],
        Field(
            title="Generator",
            description="Rows of the k x n generator matrix.",
            min_length=1,
        ),
    ]
    q: Annotated[
        PositiveInt,
        Field(
            title="Order",
            description="Prime field order.",
        ),
    ]

    @model_validator(mode="after")
    def check_generator(self) -> Self:
        """Ensure the generator is rectangular, in range, and of full rank.

        Raises:
            FieldError: If `q` is not prime.
            InputValidationError: If rows are ragged, empty, or out of range.
            NonSpanningError: If the rows are linearly dependent.

        """
        check_field(self.q)
        width = len(self.generator[0])
        if not width or any(len(row) != width for row in self.generator):
            msg = "Generator rows must be nonempty and of equal length."
            raise InputValidationError(error=ValueError(msg))
        rank = rank_gf(self.generator, self.q).rank
        if rank != len(self.generator):
            raise NonSpanningError(rank=rank, k=len(self.generator))
        return self

    @property
    def n(self) -> int:
        """Length of the code."""
        return len(self.generator[0])

    @property
    def k(self) -> int:
        """Dimension of the code."""
        return len(self.generator)

    @property
    def columns(self) -> tuple[tuple[int, ...], ...]:
        """Generator columns G_1, ..., G_n."""
        return tuple(zip(*self.generator, strict=True))

    @property
    def zero_columns(self) -> tuple[int, ...]:
        """Indices of the zero columns."""
        return tuple(i for i, col in enumerate(self.columns) if not any(col))

    @property
    def is_degenerate(self) -> bool:
        """Whether some generator column is zero."""
        return bool(self.zero_columns)

    def encode(self, message: Sequence[int]) -> Codeword:
        """Return the codeword `message * G`.

        Raises:
            InputValidationError: If the message has the wrong length.

        """
        if len(message) != self.k:
            msg = f"Message of length {len(message)} for a code with k={self.k}."
            raise InputValidationError(error=ValueError(msg))
        vector = tuple(
            sum(m * g for m, g in zip(message, col, strict=True)) % self.q
            for col in self.columns
        )
        return Codeword(vector=vector, q=self.q)

    def contains(self, vector: Sequence[int]) -> bool:
        """Check whether a vector of length n lies in the code."""
        if len(vector) != self.n or any(not 0 <= x < self.q for x in vector):
            return False
        return rank_gf([*self.generator, tuple(vector)], self.q).rank == self.k


class Witness(LockedModel):
    """Non-minimality witness.

    Attributes:
        codeword (Codeword): A nonzero codeword that is not minimal.
        contained (Codeword): A nonzero codeword whose support lies strictly
            inside the support of `codeword`.

    """

    codeword: Annotated[
        Codeword,
        Field(
            title="Codeword",
            description="Codeword that is not minimal.",
        ),
    ]
    contained: Annotated[
        Codeword,
        Field(
            title="Contained",
            description="Codeword with strictly smaller support.",
        ),
    ]


class MinimalityReport(LockedModel):
    """Code minimality verdict.

    Attributes:
        minimal (bool): Whether every nonzero codeword is minimal.
        witnesses (tuple[Witness, ...]): Witness pairs, one per non-minimal
            codeword up to the requested limit.
        n (PositiveInt): Length of the code.
        k (PositiveInt): Dimension of the code.
        q (PositiveInt): Field order.

    """

    minimal: Annotated[
        bool,
        Field(
            title="Minimal",
            description="Whether every nonzero codeword is minimal.",
        ),
    ]
    witnesses: Annotated[
        tuple[Witness, ...],
        Field(
            title="Witnesses",
            description="Pairs proving non-minimality.",
        ),
    ] = ()
    n: Annotated[PositiveInt, Field(title="n", description="Code length.")]
    k: Annotated[PositiveInt, Field(title="k", description="Code dimension.")]
    q: Annotated[PositiveInt, Field(title="q", description="Field order.")]

    @model_validator(mode="after")
    def check_witnesses(self) -> Self:
        """Ensure a positive verdict carries no witness."""
        if self.minimal and self.witnesses:
            msg = "A minimal code has no witnesses."
            raise InputValidationError(error=ValueError(msg))
        return self


class ColumnPoints(LockedModel):
    """Point set of a generator matrix.

    Attributes:
        pointset (PointSet): Normalized generator columns as a point set.
        collapsed (tuple[int, ...]): Column indices that repeat (up to a
            nonzero scalar) an earlier column and were merged.

    """

    pointset: Annotated[
        PointSet,
        Field(
            title="Point set",
            description="Normalized generator columns.",
        ),
    ]
    collapsed: Annotated[
        tuple[int, ...],
        Field(
            title="Collapsed",
            description="Columns merged into an earlier proportional column.",
        ),
    ] = ()


class CodewordTable:
    """All codewords of a code in message order, with support masks."""

    __slots__ = ("code", "masks", "vectors", "weights")

    def __init__(self, code: LinearCode, budgets: Budgets | None = None) -> None:
        """Enumerate the codewords of `code` within the codeword budget."""
        budgets = budgets or Budgets.from_env()
        require("codewords", code.q**code.k, budgets.codewords)

        self.code = code
        self.vectors: npt.NDArray[np.int64] = np.concatenate(
            list(_codeword_chunks(code)),
        )
        nonzero = self.vectors != 0
        self.weights: npt.NDArray[np.int64] = nonzero.sum(axis=1)
        if code.n < 64:  # noqa: PLR2004
            powers = np.left_shift(np.uint64(1), np.arange(code.n, dtype=np.uint64))
            self.masks = (nonzero.astype(np.uint64) * powers).sum(
                axis=1,
                dtype=np.uint64,
            )
        else:
            powers = np.array([1 << i for i in range(code.n)], dtype=object)
            self.masks = (nonzero.astype(object) * powers).sum(axis=1)

    def codeword(self, row: int) -> Codeword:
        """Return the codeword at a message-order position."""
        return Codeword(
            vector=tuple(int(x) for x in self.vectors[row]),
            q=self.code.q,
        )

    def find(self, vector: Sequence[int]) -> int:
        """Return the message-order position of a codeword.

        Raises:
            NotACodewordError: If the vector is not in the code.

        """
        target = np.asarray(vector, dtype=np.int64)
        if target.shape != (self.code.n,):
            raise NotACodewordError(tuple(vector))
        hits = np.flatnonzero((self.vectors == target).all(axis=1))
        if not hits.size:
            raise NotACodewordError(tuple(vector))
        return int(hits[0])

    def smaller(self, row: int) -> int | None:
        """Return a codeword with support strictly inside that of `row`.

        Among all candidates the one of largest weight is returned, the
        earliest in message order on ties; `None` means the codeword at `row`
        is minimal.
        """
        mask = self.masks[row]
        inside = (self.masks & mask) == self.masks
        candidates = inside & (self.masks != mask) & (self.weights > 0)
        if not candidates.any():
            return None
        weights = np.where(candidates, self.weights, -1)
        return int(np.argmax(weights))


def _codeword_chunks(code: LinearCode) -> Iterator[npt.NDArray[np.int64]]:
    gf = field(code.q)
    generator = gf(np.array(code.generator, dtype=int))
    messages = product(range(code.q), repeat=code.k)
    while True:
        chunk = np.array(
            [m for _, m in zip(range(CHUNK), messages, strict=False)],
            dtype=int,
        )
        if not chunk.size:
            return
        yield np.asarray(gf(chunk) @ generator, dtype=np.int64)


def enumerate_codewords(
    code: LinearCode,
    *,
    budgets: Budgets | None = None,
) -> Iterator[Codeword]:
    """Stream all codewords of a code.

    Codewords are produced for messages in lexicographic order, starting with
    the zero codeword; every codeword appears exactly once.

    Args:
        code (LinearCode): The code to enumerate.
        budgets (Budgets | None): Caps; `q**k` must not exceed
            `budgets.codewords`.

    Yields:
        out (Codeword): Each codeword.

    Raises:
        BudgetExceededError: If `q**k` exceeds the codeword budget.

    """
    budgets = budgets or Budgets.from_env()
    require("codewords", code.q**code.k, budgets.codewords)
    logger.debug("Enumerating %d codewords.", code.q**code.k)
    for chunk in _codeword_chunks(code):
        for row in chunk:
            yield Codeword(vector=tuple(int(x) for x in row), q=code.q)


def is_minimal_codeword(
    code: LinearCode,
    codeword: Codeword,
    *,
    budgets: Budgets | None = None,
) -> bool:
    """Decide whether a nonzero codeword is minimal.

    A codeword c is minimal when every codeword whose support lies inside the
    support of c is a scalar multiple of c. Equivalently, no nonzero codeword
    has support strictly inside that of c.

    Args:
        code (LinearCode): The code.
        codeword (Codeword): A nonzero codeword of `code`.
        budgets (Budgets | None): Caps on codeword enumeration.

    Returns:
        out (bool): Whether the codeword is minimal.

    Raises:
        NotACodewordError: If the vector is not in the code.
        PreconditionError: If the codeword is zero.
        BudgetExceededError: If `q**k` exceeds the codeword budget.

    """
    if codeword.q != code.q or not code.contains(codeword.vector):
        raise NotACodewordError(codeword.vector)
    if not codeword.weight:
        raise PreconditionError(message="Minimality is defined for nonzero codewords.")
    table = CodewordTable(code, budgets)
    return table.smaller(table.find(codeword.vector)) is None


def is_minimal_code(
    code: LinearCode,
    *,
    limit: int | None = None,
    budgets: Budgets | None = None,
) -> MinimalityReport:
    """Decide whether every nonzero codeword of a code is minimal.

    Supports are compared as bitmasks; codewords sharing a support share the
    verdict, so each distinct support is tested once.

    Args:
        code (LinearCode): The code.
        limit (int | None): Maximum number of witnesses to collect; `None`
            collects one per non-minimal codeword.
        budgets (Budgets | None): Caps on codeword enumeration.

    Returns:
        out (MinimalityReport): Verdict with witnesses when not minimal.

    Raises:
        BudgetExceededError: If `q**k` exceeds the codeword budget.

    """
    logger.info("Checking minimality of a [%d,%d]_%d code.", code.n, code.k, code.q)
    table = CodewordTable(code, budgets)

    verdicts: dict[int, int | None] = {}
    witnesses: list[Witness] = []
    minimal = True
    for row in range(1, len(table.vectors)):
        mask = int(table.masks[row])
        if mask not in verdicts:
            verdicts[mask] = table.smaller(row)
        contained = verdicts[mask]
        if contained is None:
            continue
        minimal = False
        if limit is not None and len(witnesses) >= limit:
            break
        witnesses.append(
            Witness(
                codeword=table.codeword(row),
                contained=table.codeword(contained),
            ),
        )

    report = MinimalityReport(
        minimal=minimal,
        witnesses=tuple(witnesses),
        n=code.n,
        k=code.k,
        q=code.q,
    )
    logger.info(
        "Code is %s (%d witnesses).",
        "minimal" if report.minimal else "not minimal",
        len(report.witnesses),
    )
    return report


def weight_distribution(
    code: LinearCode,
    *,
    budgets: Budgets | None = None,
) -> tuple[int, ...]:
    """Return the number of codewords of each weight 0, 1, ..., n."""
    table = CodewordTable(code, budgets)
    counts = np.bincount(table.weights, minlength=code.n + 1)
    return tuple(int(c) for c in counts)


def minimum_distance(code: LinearCode, *, budgets: Budgets | None = None) -> int:
    """Return the smallest weight of a nonzero codeword."""
    distribution = weight_distribution(code, budgets=budgets)
    return next(w for w, count in enumerate(distribution) if w and count)


def pointset_from_code(
    code: LinearCode,
    geometry: Geometry | None = None,
) -> ColumnPoints:
    """Return the point set of the generator columns.

    Columns that are scalar multiples of an earlier column map to the same
    point; they are merged and reported in `collapsed`.

    Args:
        code (LinearCode): A non-degenerate code.
        geometry (Geometry | None): PG(k-1, q); built when omitted.

    Returns:
        out (ColumnPoints): The point set and the merged column indices.

    Raises:
        DegenerateCodeError: If a column is zero.
        GeometryMismatchError: If `geometry` is not PG(k-1, q).

    """
    geometry = geometry or build_geometry(code.k, code.q)
    if (geometry.k, geometry.q) != (code.k, code.q):
        raise GeometryMismatchError(
            expected=(code.k, code.q),
            actual=(geometry.k, geometry.q),
        )
    if code.is_degenerate:
        raise DegenerateCodeError(code.zero_columns[0])

    mask = 0
    collapsed: list[int] = []
    for j, column in enumerate(code.columns):
        bit = 1 << geometry.index[ProjPoint.normalize(column, code.q)]
        if mask & bit:
            collapsed.append(j)
        mask |= bit

    if collapsed:
        logger.warning(
            "Columns %s repeat earlier columns up to scalars; merged into "
            "a point set of size %d.",
            collapsed,
            mask.bit_count(),
        )
    return ColumnPoints(
        pointset=PointSet(geometry=geometry, mask=mask),
        collapsed=tuple(collapsed),
    )


def code_from_pointset(points: PointSet) -> LinearCode:
    """Return the code whose generator columns are the given points.

    Columns appear in canonical point order, so `n` equals the size of the
    point set.

    Args:
        points (PointSet): A point set spanning the whole space.

    Returns:
        out (LinearCode): The [|S|, k]_q code.

    Raises:
        NonSpanningError: If the points span a proper subspace.

    """
    geometry = points.geometry
    rank = geometry.rank(points.mask)
    if rank != geometry.k:
        raise NonSpanningError(rank=rank, k=geometry.k)
    columns = points.coords
    return LinearCode(
        generator=tuple(zip(*columns, strict=True)),
        q=geometry.q,
    )


def simplex_code(k: int, q: int) -> LinearCode:
    """Return the simplex code, whose columns are all points of PG(k-1, q)."""
    geometry = build_geometry(k, q)
    return code_from_pointset(geometry.pointset(geometry.full))


def repetition_code(n: int, q: int) -> LinearCode:
    """Return the [n, 1]_q repetition code."""
    if n < 1:
        msg = f"Repetition code needs n >= 1, got {n}."
        raise InputValidationError(error=ValueError(msg))
    return LinearCode(generator=((1,) * n,), q=q)


