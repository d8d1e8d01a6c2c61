"""General utility functions.

This submodule provides various utility functions and decorators used
throughout the package.

Includes:
    projective_space: Decorator to require a specific PG(k-1, q).
    binary: Decorator to require a geometry over GF(2).
"""

from __future__ import annotations

import logging
from functools import wraps
from typing import (
    TYPE_CHECKING,
    Any,
    cast,
)

from .errors import GeometryMismatchError, PreconditionError

if TYPE_CHECKING:
    from collections.abc import Callable

    from .geometry import Geometry


logger: logging.Logger = logging.getLogger(__name__)


__all__: list[str] = [
    "binary",
    "projective_space",
]


def is_geometry(obj: object) -> bool:
    """Check whether an object looks like a built geometry."""
    return (
        hasattr(obj, "k")
        and hasattr(obj, "q")
        and hasattr(obj, "hyperplanes")
        and hasattr(obj, "points")
    )


def extract_geometry(*args: Any, **kwargs: Any) -> Geometry:
    """Extract the geometry from positional or keyword arguments.

    Takes the first argument that is a geometry, then an explicit `geometry`
    keyword argument, then the `geometry` attribute of the first argument
    (point sets and groups carry one).

    Raises:
        PreconditionError: If no geometry can be found.

    """
    for arg in args:
        if is_geometry(arg):
            return cast("Geometry", arg)
    if "geometry" in kwargs and is_geometry(kwargs["geometry"]):
        return cast("Geometry", kwargs["geometry"])
    for arg in (*args, *kwargs.values()):
        if is_geometry(getattr(arg, "geometry", None)):
            return cast("Geometry", getattr(arg, "geometry"))
    raise PreconditionError(message="Geometry not found in arguments.")


def projective_space[**Params, Return](
    k: int,
    q: int,
) -> Callable[[Callable[Params, Return]], Callable[Params, Return]]:
    """Require a specific projective space.

    Inspects the geometry passed to the decorated function (directly or via
    a point set) and raises a :class:`GeometryMismatchError` unless it is
    PG(k-1, q).

    Args:
        k (int): Required vector space dimension.
        q (int): Required field order.

    Returns:
        out (Callable): Decorator wrapping the function with the check.

    """

    def decorator(func: Callable[Params, Return]) -> Callable[Params, Return]:
        @wraps(func)
        def wrapper(*args: Params.args, **kwargs: Params.kwargs) -> Return:
            geometry = extract_geometry(*args, **kwargs)
            logger.debug(
                "Verifying geometry PG(%d,%d) for function '%s'.",
                k - 1,
                q,
                func.__name__,
            )
            if (geometry.k, geometry.q) != (k, q):
                msg = (
                    f"{func.__name__}() requires PG({k - 1},{q}), got "
                    f"PG({geometry.k - 1},{geometry.q})"
                )
                logger.error(msg)
                raise GeometryMismatchError(
                    expected=(k, q),
                    actual=(geometry.k, geometry.q),
                )
            return func(*args, **kwargs)

        return wrapper

    return decorator


def binary[**Params, Return](
    func: Callable[Params, Return],
) -> Callable[Params, Return]:
    """Require a geometry over GF(2).

    Inspects the geometry passed to the decorated function and raises a
    :class:`GeometryMismatchError` if its field order is not 2.

    Args:
        func (Callable[Params, Return]): The function to decorate.

    Returns:
        out (Callable[Params, Return]): The wrapped function.

    """

    @wraps(func)
    def wrapper(*args: Params.args, **kwargs: Params.kwargs) -> Return:
        geometry = extract_geometry(*args, **kwargs)
        if geometry.q != 2:  # noqa: PLR2004
            msg = f"{func.__name__}() requires q = 2, got q = {geometry.q}"
            logger.error(msg)
            raise GeometryMismatchError(expected="q = 2", actual=f"q = {geometry.q}")
        return func(*args, **kwargs)

    return wrapper
