"""Point-set and generator-matrix files.

This submodule reads and writes the two plain-text formats used by the
command-line tool:

- point-set files: a header line `pg k q` followed by one point per line as
  comma-separated coordinates over GF(q). Any nonzero scalar multiple of a
  point is accepted and normalized. A file may hold several sets, each
  starting with its own header.
- generator files: a header line `code k n q` followed by k rows of n
  comma-separated entries.

In both formats `#` starts a comment and blank lines are ignored.

Exports:
    parse_pointsets: Parse point sets from text.
    read_pointsets: Read point sets from a file.
    read_pointset: Read exactly one point set from a file.
    format_pointsets: Render point sets as text.
    write_pointsets: Write point sets to a file.
    parse_code: Parse a generator matrix from text.
    read_code: Read a generator matrix from a file.
    format_code: Render a generator matrix as text.
    write_code: Write a generator matrix to a file.
"""

from __future__ import annotations

import logging
from pathlib import Path
from typing import TYPE_CHECKING

from .codes import LinearCode
from .errors import (
    FieldError,
    GeometryCapError,
    InputValidationError,
    ParseError,
)
from .geometry import build_geometry

if TYPE_CHECKING:
    from collections.abc import Iterable, Iterator

    from .budgets import Budgets
    from .geometry import PointSet


logger: logging.Logger = logging.getLogger(__name__)


POINTSET_HEADER: str = "pg k q"
CODE_HEADER: str = "code k n q"


__all__: list[str] = [
    "format_code",
    "format_pointsets",
    "parse_code",
    "parse_pointsets",
    "read_code",
    "read_pointset",
    "read_pointsets",
    "write_code",
    "write_pointsets",
]


def _lines(text: str) -> Iterator[tuple[int, str]]:
    """Yield `(line number, content)` with comments and blank lines removed."""
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if content:
            yield number, content


def _integers(content: str, source: str, number: int) -> list[int]:
    try:
        return [int(field) for field in content.split(",")]
    except ValueError as e:
        raise ParseError(source, number, f"Expected integers, got '{content}'.") from e


def _header(content: str, usage: str, source: str, number: int) -> list[int]:
    keyword, *names = usage.split()
    fields = content.split()
    if len(fields) != len(names) + 1 or fields[0] != keyword:
        msg = f"Expected header '{usage}', got '{content}'."
        raise ParseError(source, number, msg)
    try:
        return [int(field) for field in fields[1:]]
    except ValueError as e:
        msg = f"Header values must be integers: '{content}'."
        raise ParseError(source, number, msg) from e


def parse_pointsets(
    text: str,
    source: str = "<string>",
    *,
    budgets: Budgets | None = None,
) -> list[PointSet]:
    """Parse one or more point sets.

    Args:
        text (str): File contents.
        source (str): Name used in error messages.
        budgets (Budgets | None): Caps applied when building each geometry.

    Returns:
        out (list[PointSet]): The sets in file order.

    Raises:
        ParseError: On a malformed header or point, a point of the wrong
            length, the zero vector, a non-prime field, or an empty file.

    """
    blocks: list[tuple[int, list[int], list[tuple[int, list[int]]]]] = []
    for number, content in _lines(text):
        if content.split()[0] == POINTSET_HEADER.split()[0]:
            header = _header(content, POINTSET_HEADER, source, number)
            blocks.append((number, header, []))
        elif not blocks:
            raise ParseError(source, number, "Point before the 'pg k q' header.")
        else:
            blocks[-1][2].append((number, _integers(content, source, number)))
    if not blocks:
        raise ParseError(source, 1, "No 'pg k q' header found.")

    pointsets: list[PointSet] = []
    for line, (k, q), rows in blocks:
        try:
            geometry = build_geometry(k, q, budgets=budgets)
        except (FieldError, GeometryCapError, InputValidationError) as e:
            raise ParseError(source, line, str(e)) from e
        indices: list[int] = []
        for number, coords in rows:
            if len(coords) != k:
                msg = f"Point has {len(coords)} coordinates, expected {k}."
                raise ParseError(source, number, msg)
            if not any(c % q for c in coords):
                raise ParseError(source, number, "The zero vector is not a point.")
            indices.append(geometry.index_of(coords))
        if len(set(indices)) != len(indices):
            logger.warning(
                "%s: block at line %d repeats points; duplicates are merged.",
                source,
                line,
            )
        pointsets.append(geometry.pointset(indices))
    logger.debug("Parsed %d point sets from %s.", len(pointsets), source)
    return pointsets


def _read_text(path: Path) -> str:
    data = path.read_bytes()
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as e:
        line = data[: e.start].count(b"\n") + 1
        raise ParseError(str(path), line, "File is not valid UTF-8 text.") from e


def read_pointsets(
    path: str | Path,
    *,
    budgets: Budgets | None = None,
) -> list[PointSet]:
    """Read all point sets from a file."""
    path = Path(path)
    return parse_pointsets(_read_text(path), str(path), budgets=budgets)


def read_pointset(path: str | Path, *, budgets: Budgets | None = None) -> PointSet:
    """Read a file holding exactly one point set.

    Raises:
        ParseError: If the file holds more than one set.

    """
    pointsets = read_pointsets(path, budgets=budgets)
    if len(pointsets) != 1:
        msg = f"Expected one point set, found {len(pointsets)}."
        raise ParseError(str(path), 1, msg)
    return pointsets[0]


def format_pointsets(pointsets: Iterable[PointSet], comment: str | None = None) -> str:
    """Render point sets as text, one block per set."""
    lines: list[str] = []
    if comment:
        lines.extend(f"# {line}" for line in comment.splitlines())
    for points in pointsets:
        geometry = points.geometry
        if lines:
            lines.append("")
        lines.append(f"pg {geometry.k} {geometry.q}")
        lines.extend(",".join(map(str, coords)) for coords in points.coords)
    return "\n".join(lines) + "\n"


def write_pointsets(
    path: str | Path,
    pointsets: Iterable[PointSet],
    comment: str | None = None,
) -> None:
    """Write point sets to a file."""
    path = Path(path)
    path.write_text(format_pointsets(pointsets, comment), encoding="utf-8")
    logger.info("Wrote point sets to %s.", path)


def parse_code(text: str, source: str = "<string>") -> LinearCode:
    """Parse a generator matrix.

    Args:
        text (str): File contents.
        source (str): Name used in error messages.

    Returns:
        out (LinearCode): The code.

    Raises:
        ParseError: On a malformed header or row, a wrong number of rows or
            entries, entries outside GF(q), or a non-prime field.
        NonSpanningError: If the rows are linearly dependent.

    """
    lines = list(_lines(text))
    if not lines:
        raise ParseError(source, 1, "No 'code k n q' header found.")
    line, header = lines[0]
    k, n, q = _header(header, CODE_HEADER, source, line)

    rows = [
        (number, _integers(content, source, number)) for number, content in lines[1:]
    ]
    if len(rows) != k:
        last = rows[-1][0] if rows else line
        raise ParseError(source, last, f"Expected {k} rows, found {len(rows)}.")
    for number, row in rows:
        if len(row) != n:
            msg = f"Row has {len(row)} entries, expected {n}."
            raise ParseError(source, number, msg)
        if any(not 0 <= x < q for x in row):
            raise ParseError(source, number, f"Entries must lie in [0, {q}).")

    try:
        return LinearCode(generator=tuple(tuple(row) for _, row in rows), q=q)
    except (FieldError, InputValidationError) as e:
        raise ParseError(source, line, str(e)) from e


def read_code(path: str | Path) -> LinearCode:
    """Read a generator matrix from a file."""
    path = Path(path)
    return parse_code(_read_text(path), str(path))


def format_code(code: LinearCode) -> str:
    """Render a generator matrix as text."""
    lines = [f"code {code.k} {code.n} {code.q}"]
    lines.extend(",".join(map(str, row)) for row in code.generator)
    return "\n".join(lines) + "\n"


def write_code(path: str | Path, code: LinearCode) -> None:
    """Write a generator matrix to a file."""
    path = Path(path)
    path.write_text(format_code(code), encoding="utf-8")
    logger.info("Wrote generator matrix to %s.", path)
