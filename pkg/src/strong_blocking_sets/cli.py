"""Command-line interface.

This submodule implements the `sbs` command. Every subcommand writes a JSON
report with the fields `command`, `version`, `inputs`, `payload` and
`elapsed`, in that order, to standard output or to the file given with
`--output`. Log messages go to standard error.

Exit codes:
    0: affirmative verdict (strong, minimal, golden table matched, or a
       search that found sets or covered its whole space).
    1: negative verdict.
    2: usage, parse or precondition error.
    3: budget exceeded.

Budgets default to the `SBS_BUDGET_<NAME>` environment variables. The report
schema is printed by `sbs --schema`.

Exports:
    Command: Available subcommands.
    Report: Model representing a command report.
    main: Entry point of the `sbs` command.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from time import perf_counter
from typing import TYPE_CHECKING, Any, NoReturn

from pydantic import ValidationError
from pydantic_core import to_json
from rich.console import Console
from rich.logging import RichHandler
from rich.progress import Progress as ProgressBar

from .__meta__ import __version__
from .blocking import (
    QUADRIC_SIZE,
    check_contained_lines,
    check_plane_sections,
    is_strong_blocking_set,
    lower_bound,
)
from .budgets import Budgets
from .classify import (
    GOLDEN_ORBITS,
    build_group,
    canonical_form,
    classify_subsets,
    remark_witnesses,
)
from .codes import is_minimal_code, pointset_from_code
from .errors import BudgetExceededError, SbsError
from .formats import format_pointsets, read_code, read_pointset, write_pointsets
from .geometry import build_geometry, hyperbolic_quadric, parabolic_quadric
from .reports import (
    BoundPayload,
    ClassifyPayload,
    CodeCheckPayload,
    GoldenRecord,
    MinimalityRecord,
    OrbitRecord,
    Payload,
    QuadricPayload,
    Report,
    SearchPayload,
    VerifyPayload,
    report_schema,
)
from .schemas import CleanEnum
from .search import (
    SearchConfig,
    SearchMode,
    find_all_sbs,
    prove_nonexistence,
    search_line_union,
)

if TYPE_CHECKING:
    from collections.abc import Callable, Sequence

    from .schemas import Progress


logger: logging.Logger = logging.getLogger(__name__)


EXIT_OK: int = 0
EXIT_NEGATIVE: int = 1
EXIT_USAGE: int = 2
EXIT_BUDGET: int = 3

GOLDEN_PARAMETERS: tuple[int, int, int] = (4, 2, QUADRIC_SIZE)

STDERR: Console = Console(stderr=True)


__all__: list[str] = [
    "Command",
    "Report",
    "main",
]


class Command(CleanEnum):
    """Available subcommands."""

    VERIFY = "verify"
    CODE_CHECK = "code-check"
    CLASSIFY = "classify"
    SEARCH = "search"
    QUADRIC = "quadric"
    BOUND = "bound"


class UsageError(SbsError):
    """Arguments are individually valid but not together."""


type Outcome = tuple[Payload, int]


def _progress(bar: ProgressBar, description: str) -> Progress:
    task = bar.add_task(description, total=None)

    def update(current: int, total: int | None) -> None:
        bar.update(task, completed=current, total=total)

    return update


def cmd_verify(args: argparse.Namespace, budgets: Budgets) -> Outcome:
    """Check a point-set file for the strong blocking property."""
    points = read_pointset(args.file, budgets=budgets)
    geometry = points.geometry
    report = is_strong_blocking_set(points, total=True)
    payload = VerifyPayload(
        blocking=report,
        lower_bound=lower_bound(geometry.k, geometry.q),
    )
    if (geometry.k, geometry.q, len(points)) == GOLDEN_PARAMETERS:
        payload = payload.model_copy(
            update={
                "plane_sections": check_plane_sections(points),
                "contained_lines": check_contained_lines(points),
            },
        )
    return payload, EXIT_OK if report.is_strong else EXIT_NEGATIVE


def cmd_code_check(args: argparse.Namespace, budgets: Budgets) -> Outcome:
    """Check a generator file for minimality, on both sides of the bijection."""
    code = read_code(args.file)
    report = is_minimal_code(code, limit=args.witnesses, budgets=budgets)
    record = MinimalityRecord.model_validate(report.model_dump(mode="json"))

    if code.is_degenerate:
        logger.warning(
            "Generator has zero columns %s; skipping the point-set check.",
            list(code.zero_columns),
        )
        payload = CodeCheckPayload(code=record, degenerate=True)
        return payload, EXIT_OK if report.minimal else EXIT_NEGATIVE

    columns = pointset_from_code(code, build_geometry(code.k, code.q, budgets=budgets))
    blocking = is_strong_blocking_set(columns.pointset, total=True)
    agree = blocking.is_strong == report.minimal
    if not agree:
        logger.error("Code and point-set verdicts disagree.")
    payload = CodeCheckPayload(
        code=record,
        degenerate=False,
        collapsed=tuple(columns.collapsed),
        blocking=blocking,
        agree=agree,
    )
    return payload, EXIT_OK if report.minimal and agree else EXIT_NEGATIVE


def cmd_classify(args: argparse.Namespace, budgets: Budgets) -> Outcome:
    """Classify all subsets of a size into orbits."""
    if args.golden and (args.k, args.q, args.size) != GOLDEN_PARAMETERS:
        msg = "The golden table covers --k 4 --q 2 --size 9 only."
        raise UsageError(msg)

    geometry = build_geometry(args.k, args.q, budgets=budgets)
    group = build_group(geometry, budgets=budgets)
    with ProgressBar(console=STDERR, transient=True, disable=args.quiet) as bar:
        reports = classify_subsets(
            geometry,
            args.size,
            group,
            workers=args.workers,
            progress=_progress(bar, "Classifying"),
            budgets=budgets,
        )
    payload = ClassifyPayload(
        group_order=group.order,
        total=sum(r.orbit_size for r in reports),
        orbits=tuple(
            OrbitRecord.model_validate(r.model_dump(mode="json")) for r in reports
        ),
    )
    if not args.golden:
        return payload, EXIT_OK

    sizes = {r.representative.mask: r.orbit_size for r in reports}
    configurations = {
        name.value: sizes[canonical_form(points, group).mask]
        for name, points in remark_witnesses(geometry).items()
    }
    matched = tuple(configurations.values()) == GOLDEN_ORBITS and len(reports) == len(
        GOLDEN_ORBITS,
    )
    golden = GoldenRecord(configurations=configurations, matched=matched)
    payload = payload.model_copy(update={"golden": golden})
    if not matched:
        logger.error("Orbit sizes %s differ from %s.", configurations, GOLDEN_ORBITS)
    return payload, EXIT_OK if matched else EXIT_NEGATIVE


def cmd_search(args: argparse.Namespace, budgets: Budgets) -> Outcome:
    """Search for strong blocking sets of a size."""
    geometry = build_geometry(args.k, args.q, budgets=budgets)
    mode = SearchMode(args.mode)
    config = SearchConfig(
        k=args.k,
        q=args.q,
        target_size=args.size,
        mode=mode,
        budget=args.budget,
        seed=args.seed,
        workers=args.workers,
        up_to_orbit=args.up_to_orbit,
    )

    with ProgressBar(console=STDERR, transient=True, disable=args.quiet) as bar:
        progress = _progress(bar, "Searching")
        match mode:
            case SearchMode.EXHAUSTIVE:
                result = find_all_sbs(
                    geometry,
                    args.size,
                    workers=args.workers,
                    up_to_orbit=args.up_to_orbit,
                    progress=progress,
                    budgets=budgets,
                )
            case SearchMode.PRUNED:
                result = prove_nonexistence(
                    geometry,
                    args.size,
                    config,
                    progress=progress,
                    budgets=budgets,
                )
            case SearchMode.LINE_UNION:
                line_size = args.q + 1
                if args.size % line_size:
                    msg = (
                        f"Size {args.size} is not a multiple "
                        f"of the line size {line_size}."
                    )
                    raise UsageError(msg)
                result = search_line_union(
                    geometry,
                    args.size // line_size,
                    config,
                    budgets=budgets,
                )

    if args.emit:
        write_pointsets(
            args.emit,
            result.found,
            comment=f"{len(result.found)} strong blocking sets of size {args.size}",
        )
    payload = SearchPayload(
        found=len(result.found),
        nodes_explored=result.nodes_explored,
        exhausted=result.exhausted,
    )
    if result.found or result.exhausted:
        return payload, EXIT_OK
    if mode is SearchMode.PRUNED:
        logger.error("Node budget ran out before the search space was covered.")
        return payload, EXIT_BUDGET
    return payload, EXIT_NEGATIVE


def cmd_quadric(args: argparse.Namespace, budgets: Budgets) -> Outcome:
    """Emit the hyperbolic (k = 4) or parabolic (k = 5) binary quadric."""
    geometry = build_geometry(args.k, args.q, budgets=budgets)
    constructor = hyperbolic_quadric if args.k == 4 else parabolic_quadric  # noqa: PLR2004
    quadric = constructor(geometry)
    report = is_strong_blocking_set(quadric)

    if args.emit:
        write_pointsets(args.emit, [quadric], comment=f"quadric of {geometry.name}")
    else:
        sys.stdout.write(format_pointsets([quadric]))
    payload = QuadricPayload(
        size=len(quadric),
        is_strong=report.is_strong,
        points=quadric.coords,
    )
    return payload, EXIT_OK if report.is_strong else EXIT_NEGATIVE


def cmd_bound(args: argparse.Namespace, _: Budgets) -> Outcome:
    """Print the lower bound on the size of a strong blocking set."""
    return BoundPayload(lower_bound=lower_bound(args.k, args.q)), EXIT_OK


COMMANDS: dict[Command, Callable[[argparse.Namespace, Budgets], Outcome]] = {
    Command.VERIFY: cmd_verify,
    Command.CODE_CHECK: cmd_code_check,
    Command.CLASSIFY: cmd_classify,
    Command.SEARCH: cmd_search,
    Command.QUADRIC: cmd_quadric,
    Command.BOUND: cmd_bound,
}


class SchemaAction(argparse.Action):
    """Print the JSON Schema of the report and exit."""

    def __init__(
        self,
        option_strings: Sequence[str],
        dest: str,
        **kwargs: Any,
    ) -> None:
        """Initialize the action as a flag without a value."""
        kwargs.setdefault("default", argparse.SUPPRESS)
        super().__init__(option_strings, dest, nargs=0, **kwargs)

    def __call__(
        self,
        parser: argparse.ArgumentParser,
        namespace: argparse.Namespace,
        values: object,
        option_string: str | None = None,
    ) -> NoReturn:
        """Write the schema to standard output."""
        sys.stdout.write(to_json(report_schema(), indent=2).decode() + "\n")
        parser.exit()


def _space(parser: argparse.ArgumentParser, k: int | None = None) -> None:
    parser.add_argument(
        "--k",
        type=int,
        required=k is None,
        default=k,
        help="dimension of the underlying vector space",
    )
    parser.add_argument("--q", type=int, default=2, help="prime field order")


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser of the `sbs` command."""
    parser = argparse.ArgumentParser(
        prog="sbs",
        description="Verify, classify and search strong blocking sets "
        "and minimal linear codes.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument(
        "--schema",
        action=SchemaAction,
        help="print the JSON Schema of the report and exit",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    parser.add_argument("--quiet", action="store_true", help="warnings only")
    parser.add_argument("--output", type=Path, help="write the JSON report here")
    commands = parser.add_subparsers(dest="command", required=True)

    verify = commands.add_parser(Command.VERIFY.value, help="check a point-set file")
    verify.add_argument("file", type=Path)

    code = commands.add_parser(Command.CODE_CHECK.value, help="check a generator file")
    code.add_argument("file", type=Path)
    code.add_argument("--witnesses", type=int, default=10, help="witness limit")

    classify = commands.add_parser(Command.CLASSIFY.value, help="classify subsets")
    _space(classify)
    classify.add_argument("--size", type=int, required=True)
    classify.add_argument("--workers", type=int, default=1)
    classify.add_argument("--golden", action="store_true", help="compare orbit sizes")

    search = commands.add_parser(Command.SEARCH.value, help="search for sets")
    _space(search)
    search.add_argument("--size", type=int, required=True)
    search.add_argument(
        "--mode",
        choices=[m.value for m in SearchMode],
        default=SearchMode.EXHAUSTIVE.value,
    )
    search.add_argument("--budget", type=int, help="node or trial limit")
    search.add_argument("--seed", type=int, default=0)
    search.add_argument("--workers", type=int, default=1)
    search.add_argument("--up-to-orbit", action="store_true")
    search.add_argument("--emit", type=Path, help="write found sets here")

    quadric = commands.add_parser(Command.QUADRIC.value, help="emit a quadric")
    quadric.add_argument("--k", type=int, choices=(4, 5), default=4)
    quadric.add_argument("--q", type=int, choices=(2,), default=2)
    quadric.add_argument("--emit", type=Path, help="write the fixture here")

    bound = commands.add_parser(Command.BOUND.value, help="print the lower bound")
    _space(bound)
    return parser


def configure_logging(*, verbose: bool = False, quiet: bool = False) -> None:
    """Send log records to standard error through rich."""
    level = logging.DEBUG if verbose else logging.WARNING if quiet else logging.INFO
    logging.basicConfig(
        level=level,
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=STDERR, show_path=False)],
        force=True,
    )


def main(argv: Sequence[str] | None = None) -> int:
    """Run the `sbs` command and return its exit code."""
    args = build_parser().parse_args(argv)
    configure_logging(verbose=args.verbose, quiet=args.quiet)
    command = Command(args.command)
    inputs = {
        key: str(value) if isinstance(value, Path) else value
        for key, value in sorted(vars(args).items())
        if key not in {"command", "verbose", "quiet", "output"}
    }

    start = perf_counter()
    try:
        payload, code = COMMANDS[command](args, Budgets.from_env())
    except BudgetExceededError as e:
        logger.error("%s", e)  # noqa: TRY400
        return EXIT_BUDGET
    except (SbsError, OSError, ValidationError) as e:
        logger.error("%s", e)  # noqa: TRY400
        return EXIT_USAGE

    report = Report(
        command=command.value,
        inputs=inputs,
        payload=payload,
        elapsed=perf_counter() - start,
    )
    text = report.model_dump_json(indent=2)
    if args.output:
        args.output.write_text(text + "\n", encoding="utf-8")
    elif command is not Command.QUADRIC or args.emit:
        sys.stdout.write(text + "\n")
    return code
