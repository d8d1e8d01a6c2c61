"""Custom exceptions.

This submodule centralizes all error types raised by the package and
normalizes error handling across input validation, finite-field and geometry
preconditions, code construction, budgets, and file parsing.

Exports:
    SbsError: Base class for all package errors.
    InputValidationError: Pydantic or value validation failed for input data.
    PreconditionError: An operation contract was violated.
    FieldError: Field order is not a supported prime.
    GeometryCapError: Geometry tables would exceed the configured cap.
    GeometryMismatchError: Object or operation belongs to another geometry.
    EmptySpanError: Span of an empty point set was requested.
    DegenerateCodeError: Generator matrix has a zero column.
    NonSpanningError: Points or generator rows do not span the space.
    NotACodewordError: Vector is not a codeword of the code.
    BudgetExceededError: Work required exceeds the configured budget.
    SoundnessError: A search reported a set that fails re-verification.
    ParseError: Point-set or generator file is malformed.
"""

from __future__ import annotations

__all__: list[str] = [
    "BudgetExceededError",
    "DegenerateCodeError",
    "EmptySpanError",
    "FieldError",
    "GeometryCapError",
    "GeometryMismatchError",
    "InputValidationError",
    "NonSpanningError",
    "NotACodewordError",
    "ParseError",
    "PreconditionError",
    "SbsError",
    "SoundnessError",
]


class SbsError(Exception):
    """Base class for all package errors."""


class InputValidationError(SbsError):
    """Validation failed while processing input data."""

    def __init__(self, error: Exception) -> None:
        """Initialize an input validation error.

        Args:
            error (Exception): Underlying Pydantic or value error.

        """
        self.error = error
        super().__init__(f"Input validation failed: {error}")


class PreconditionError(SbsError):
    """An operation was called outside its contract."""

    def __init__(self, message: str) -> None:
        """Initialize a precondition error.

        Args:
            message (str): Description of the violated precondition.

        """
        self.message = message
        super().__init__(message)


class FieldError(SbsError):
    """Field order is not a prime within the configured cap."""

    def __init__(self, q: int, cap: int | None = None) -> None:
        """Initialize a field error.

        Args:
            q (int): Requested field order.
            cap (int | None): Largest field order allowed, if the failure is
                due to the cap rather than primality.

        """
        self.q = q
        self.cap = cap
        reason = "is not prime" if cap is None else f"exceeds the cap {cap}"
        super().__init__(f"Unsupported field order {q}: {reason}.")


class GeometryCapError(SbsError):
    """Geometry tables would exceed the configured size cap."""

    def __init__(
        self,
        k: int,
        q: int,
        value: int,
        cap: int,
        quantity: str = "points",
    ) -> None:
        """Initialize a geometry cap error.

        Args:
            k (int): Vector space dimension.
            q (int): Field order.
            value (int): Size the geometry would have.
            cap (int): Maximum size allowed.
            quantity (str): What was measured ("points" or "dimension").

        """
        self.k = k
        self.q = q
        self.value = value
        self.cap = cap
        self.quantity = quantity
        super().__init__(
            f"PG({k - 1},{q}) exceeds the {quantity} cap: {value} > {cap}.",
        )


class GeometryMismatchError(SbsError):
    """Object or operation belongs to a different geometry."""

    def __init__(
        self,
        expected: tuple[int, int] | str,
        actual: tuple[int, int] | str,
    ) -> None:
        """Initialize a geometry mismatch error.

        Args:
            expected (tuple[int, int] | str): Expected `(k, q)` or a
                description of the requirement.
            actual (tuple[int, int] | str): Actual `(k, q)` or a description.

        """
        self.expected = expected
        self.actual = actual
        super().__init__(f"Geometry mismatch: expected {expected}, got {actual}.")


class EmptySpanError(SbsError):
    """Span of an empty point set was requested."""

    def __init__(self) -> None:
        """Initialize an empty span error."""
        super().__init__("The span of the empty point set is undefined.")


class DegenerateCodeError(SbsError):
    """Generator matrix has a zero column."""

    def __init__(self, column: int) -> None:
        """Initialize a degenerate code error.

        Args:
            column (int): Zero-based index of the first zero column.

        """
        self.column = column
        super().__init__(f"Degenerate code: column {column} is zero.")


class NonSpanningError(SbsError):
    """Points or generator rows do not span the whole space."""

    def __init__(self, rank: int, k: int) -> None:
        """Initialize a non-spanning error.

        Args:
            rank (int): Rank that was found.
            k (int): Rank that was required.

        """
        self.rank = rank
        self.k = k
        super().__init__(f"Rank {rank} is below the required rank {k}.")


class NotACodewordError(SbsError):
    """Vector does not lie in the code."""

    def __init__(self, vector: tuple[int, ...]) -> None:
        """Initialize a not-a-codeword error.

        Args:
            vector (tuple[int, ...]): The offending vector.

        """
        self.vector = vector
        super().__init__(f"Vector {vector} is not a codeword of the code.")


class BudgetExceededError(SbsError):
    """Work required by an operation exceeds the configured budget."""

    def __init__(
        self,
        operation: str,
        required: int,
        budget: int,
        hint: str | None = None,
    ) -> None:
        """Initialize a budget exceeded error.

        Args:
            operation (str): Name of the operation that was refused.
            required (int): Budget the operation would need.
            budget (int): Budget currently configured.
            hint (str | None): Suggested alternative, if any.

        """
        self.operation = operation
        self.required = required
        self.budget = budget
        self.hint = hint
        message = (
            f"Budget exceeded for '{operation}': requires {required}, "
            f"budget is {budget}."
        )
        if hint:
            message = f"{message} {hint}"
        super().__init__(message)


class SoundnessError(SbsError):
    """A search returned a set that fails independent re-verification."""

    def __init__(self, mask: int) -> None:
        """Initialize a soundness error.

        Args:
            mask (int): Bitmask of the offending point set.

        """
        self.mask = mask
        super().__init__(f"Point set {mask:#x} failed re-verification.")


class ParseError(SbsError):
    """Point-set or generator file is malformed."""

    def __init__(self, source: str, line: int, message: str) -> None:
        """Initialize a parse error.

        Args:
            source (str): File name or `<string>` for in-memory text.
            line (int): One-based line number of the failure.
            message (str): Description of the problem.

        """
        self.source = source
        self.line = line
        self.message = message
        super().__init__(f"{source}:{line}: {message}")
