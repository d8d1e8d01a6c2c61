"""Exact linear algebra over prime fields.

This submodule provides arithmetic in GF(q) for prime q, canonical row
reduction backed by `galois`, and an incremental echelon basis used in the
inner loops of the geometry, blocking and search modules.

Exports:
    FieldElement: Model representing an element of GF(q).
    Echelon: Model holding a rank and a reduced row echelon basis.
    Basis: Incremental echelon basis over GF(q), q > 2.
    BinaryBasis: Incremental echelon basis over GF(2) on integer vectors.
    check_field: Validates a field order.
    field: Returns the `galois` field class of a prime order.
    inverse: Multiplicative inverse modulo q.
    rank_gf: Rank and reduced row echelon basis of a matrix.
"""

from __future__ import annotations

import logging
from functools import cache
from typing import TYPE_CHECKING, Annotated, Self

import galois
import numpy as np
from pydantic import Field, NonNegativeInt, PositiveInt, model_validator

from .errors import FieldError, InputValidationError
from .schemas import LockedModel

if TYPE_CHECKING:
    from collections.abc import Iterable, Sequence


logger: logging.Logger = logging.getLogger(__name__)


__all__: list[str] = [
    "Basis",
    "BinaryBasis",
    "Echelon",
    "FieldElement",
    "check_field",
    "field",
    "inverse",
    "rank_gf",
]


def check_field(q: int, cap: int | None = None) -> int:
    """Validate a field order.

    Args:
        q (int): Field order.
        cap (int | None): Largest order allowed, if any.

    Returns:
        out (int): The validated order.

    Raises:
        FieldError: If `q` is not prime or exceeds `cap`.

    """
    if q < 2 or not galois.is_prime(q):  # noqa: PLR2004
        raise FieldError(q)
    if cap is not None and q > cap:
        raise FieldError(q, cap)
    return q


@cache
def field(q: int) -> type[galois.FieldArray]:
    """Return the `galois` field class of prime order `q`.

    Raises:
        FieldError: If `q` is not prime.

    """
    return galois.GF(check_field(q))


def inverse(a: int, q: int) -> int:
    """Return the inverse of a nonzero element modulo a prime `q`."""
    if a % q == 0:
        msg = f"0 has no inverse in GF({q})."
        raise InputValidationError(error=ZeroDivisionError(msg))
    return pow(a, -1, q)


class FieldElement(LockedModel):
    """Element of a prime field.

    Represents a value of GF(q) with arithmetic carried out modulo q.

    Attributes:
        value (NonNegativeInt): Representative in `[0, q)`.
        q (PositiveInt): Prime field order.

    Examples:
        ```python
        from strong_blocking_sets import FieldElement

        a = FieldElement(value=3, q=7)
        print((a * a.inverse()).value)  # 1
        ```

    """

    value: Annotated[
        NonNegativeInt,
        Field(
            title="Value",
            description="Representative of the element in [0, q).",
        ),
    ]
    q: Annotated[
        PositiveInt,
        Field(
            title="Order",
            description="Prime order of the field.",
        ),
    ]

    @model_validator(mode="after")
    def check_range(self) -> Self:
        """Ensure the order is prime and the value lies in `[0, q)`.

        Raises:
            FieldError: If `q` is not prime.
            InputValidationError: If `value` is out of range.

        """
        check_field(self.q)
        if self.value >= self.q:
            msg = f"Value {self.value} is outside GF({self.q})."
            raise InputValidationError(error=ValueError(msg))
        return self

    def _make(self, value: int) -> FieldElement:
        return FieldElement(value=value % self.q, q=self.q)

    def _coerce(self, other: FieldElement | int) -> int:
        if isinstance(other, FieldElement):
            if other.q != self.q:
                msg = f"Cannot combine GF({self.q}) with GF({other.q})."
                raise InputValidationError(error=ValueError(msg))
            return other.value
        return other % self.q

    def __add__(self, other: FieldElement | int) -> FieldElement:
        """Add modulo q."""
        return self._make(self.value + self._coerce(other))

    def __sub__(self, other: FieldElement | int) -> FieldElement:
        """Subtract modulo q."""
        return self._make(self.value - self._coerce(other))

    def __mul__(self, other: FieldElement | int) -> FieldElement:
        """Multiply modulo q."""
        return self._make(self.value * self._coerce(other))

    def __truediv__(self, other: FieldElement | int) -> FieldElement:
        """Divide modulo q."""
        return self * inverse(self._coerce(other), self.q)

    def __neg__(self) -> FieldElement:
        """Negate modulo q."""
        return self._make(-self.value)

    def inverse(self) -> FieldElement:
        """Return the multiplicative inverse.

        Raises:
            InputValidationError: If the element is zero.

        """
        return self._make(inverse(self.value, self.q))


class Echelon(LockedModel):
    """Row reduction result.

    Attributes:
        rank (NonNegativeInt): Rank of the reduced matrix.
        basis (tuple[tuple[int, ...], ...]): Nonzero rows of the reduced row
            echelon form; canonical for the row space.

    """

    rank: Annotated[
        NonNegativeInt,
        Field(
            title="Rank",
            description="Rank of the matrix.",
        ),
    ]
    basis: Annotated[
        tuple[tuple[int, ...], ...],
        Field(
            title="Basis",
            description="Nonzero rows of the reduced row echelon form.",
        ),
    ]

    @model_validator(mode="after")
    def check_rank(self) -> Self:
        """Ensure the rank matches the number of basis rows."""
        if self.rank != len(self.basis):
            msg = f"Rank {self.rank} differs from basis size {len(self.basis)}."
            raise InputValidationError(error=ValueError(msg))
        return self


def rank_gf(matrix: Sequence[Sequence[int]], q: int) -> Echelon:
    """Row reduce a matrix over GF(q).

    Args:
        matrix (Sequence[Sequence[int]]): Rows of equal length with entries
            in `[0, q)`.
        q (int): Prime field order.

    Returns:
        out (Echelon): Rank and canonical reduced row echelon basis.

    Raises:
        FieldError: If `q` is not prime.
        InputValidationError: If rows are ragged or entries out of range.

    Examples:
        ```python
        from strong_blocking_sets import rank_gf

        print(rank_gf([[1, 0, 1], [0, 1, 1], [1, 1, 0]], 2).rank)  # 2
        ```

    """
    gf = field(q)
    rows = [list(row) for row in matrix]
    if not rows or not rows[0]:
        return Echelon(rank=0, basis=())

    width = len(rows[0])
    if any(len(row) != width for row in rows):
        msg = "Matrix rows have different lengths."
        raise InputValidationError(error=ValueError(msg))
    if any(not 0 <= x < q for row in rows for x in row):
        msg = f"Matrix entries must lie in [0, {q})."
        raise InputValidationError(error=ValueError(msg))

    reduced = gf(np.array(rows, dtype=int)).row_reduce()
    basis = tuple(
        tuple(int(x) for x in row) for row in reduced if np.count_nonzero(row)
    )
    logger.debug("Row reduced %dx%d matrix over GF(%d).", len(rows), width, q)
    return Echelon(rank=len(basis), basis=basis)


class Basis:
    """Incremental echelon basis over GF(q).

    Rows are kept normalized (leading entry 1) and indexed by the column of
    their leading entry. Vectors are sequences of integers in `[0, q)`.
    """

    __slots__ = ("q", "rows")

    def __init__(self, q: int) -> None:
        """Create an empty basis over GF(q)."""
        self.q = q
        self.rows: dict[int, list[int]] = {}

    @property
    def rank(self) -> int:
        """Number of independent vectors added so far."""
        return len(self.rows)

    def reduce(self, vector: Sequence[int]) -> list[int]:
        """Reduce a vector against the basis."""
        q = self.q
        v = [x % q for x in vector]
        while True:
            lead = next((i for i, x in enumerate(v) if x), None)
            if lead is None or lead not in self.rows:
                return v
            c = v[lead]
            row = self.rows[lead]
            v = [(a - c * b) % q for a, b in zip(v, row, strict=True)]

    def add(self, vector: Sequence[int]) -> bool:
        """Add a vector; return whether it increased the rank."""
        v = self.reduce(vector)
        for pivot, c in enumerate(v):
            if c:
                scale = inverse(c, self.q)
                self.rows[pivot] = [(x * scale) % self.q for x in v]
                return True
        return False

    def contains(self, vector: Sequence[int]) -> bool:
        """Check whether a vector lies in the span."""
        return not any(self.reduce(vector))

    def extend(
        self,
        vectors: Iterable[Sequence[int]],
        stop: int | None = None,
    ) -> int:
        """Add vectors until exhausted or the rank reaches `stop`."""
        for vector in vectors:
            if self.add(vector) and self.rank == stop:
                break
        return self.rank


class BinaryBasis:
    """Incremental echelon basis over GF(2).

    Vectors are integers whose bits are the coordinates; rows are indexed by
    their leading bit.
    """

    __slots__ = ("rows",)

    q: int = 2

    def __init__(self) -> None:
        """Create an empty binary basis."""
        self.rows: dict[int, int] = {}

    @property
    def rank(self) -> int:
        """Number of independent vectors added so far."""
        return len(self.rows)

    def reduce(self, vector: int) -> int:
        """Reduce a vector against the basis."""
        rows = self.rows
        while vector:
            top = vector.bit_length() - 1
            row = rows.get(top)
            if row is None:
                return vector
            vector ^= row
        return 0

    def add(self, vector: int) -> bool:
        """Add a vector; return whether it increased the rank."""
        v = self.reduce(vector)
        if v:
            self.rows[v.bit_length() - 1] = v
            return True
        return False

    def contains(self, vector: int) -> bool:
        """Check whether a vector lies in the span."""
        return self.reduce(vector) == 0

    def extend(self, vectors: Iterable[int], stop: int | None = None) -> int:
        """Add vectors until exhausted or the rank reaches `stop`."""
        for vector in vectors:
            if self.add(vector) and self.rank == stop:
                break
        return self.rank
