"""Searches for strong blocking sets of a given size.

This submodule provides three search strategies over the point sets of a
projective space:

- exhaustive: scan every subset of the target size;
- pruned-exhaustive: an include/exclude search that discards branches in
  which some hyperplane can no longer be spanned;
- randomized-line-union: sample unions of pairwise disjoint lines.

Exhaustive runs split the subset space into work units that do not depend on
the number of workers, so results are identical for any worker count. Every
set returned by any strategy is re-verified before it is reported.

Exports:
    SearchMode: Available search strategies.
    SearchConfig: Model representing the parameters of a search.
    SearchResult: Model representing the outcome of a search.
    find_all_sbs: Exhaustive scan of all subsets of a size.
    naive_enumeration: Unpruned reference scan used for cross-checks.
    prove_nonexistence: Pruned exhaustive search.
    partition_prefixes: Work units of the pruned search.
    search_line_union: Randomized search over unions of disjoint lines.
    disjoint_union: Union of pairwise disjoint lines.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations
from math import comb
from typing import TYPE_CHECKING, Annotated, Self

import numpy as np
from pydantic import (
    Field,
    NonNegativeInt,
    PositiveInt,
    model_validator,
)

from .blocking import is_strong_blocking_set, is_strong_mask
from .budgets import Budgets, require
from .classify import build_group
from .enumeration import partition, subset_masks
from .errors import (
    GeometryMismatchError,
    InputValidationError,
    PreconditionError,
    SoundnessError,
)
from .geometry import Geometry, PointSet, build_geometry, iter_bits
from .schemas import CleanEnum, LockedModel
from .utils import binary

if TYPE_CHECKING:
    from collections.abc import Callable, Iterable, Sequence

    from .schemas import Progress


logger: logging.Logger = logging.getLogger(__name__)


PREFIX_DEPTH: int = 4
UNIT: int = 1 << 16
ORBIT_DIMENSION_CAP: int = 4


__all__: list[str] = [
    "SearchConfig",
    "SearchMode",
    "SearchResult",
    "disjoint_union",
    "find_all_sbs",
    "naive_enumeration",
    "partition_prefixes",
    "prove_nonexistence",
    "search_line_union",
]


class SearchMode(CleanEnum):
    """Available search strategies."""

    EXHAUSTIVE = "exhaustive"
    PRUNED = "pruned-exhaustive"
    LINE_UNION = "randomized-line-union"


class SearchConfig(LockedModel):
    """Search parameters.

    Attributes:
        k (PositiveInt): Dimension of the underlying vector space.
        q (PositiveInt): Field order.
        target_size (NonNegativeInt): Size of the sets searched for.
        mode (SearchMode): Search strategy.
        budget (PositiveInt | None): Node limit of pruned searches or trial
            limit of randomized searches; `None` uses the configured default.
        seed (NonNegativeInt): Seed of randomized searches, below 2^64.
        workers (PositiveInt): Number of worker processes.
        up_to_orbit (bool): Keep one set per orbit of GL(k, 2).

    """

    k: Annotated[PositiveInt, Field(title="k", description="Vector dimension.")]
    q: Annotated[PositiveInt, Field(title="q", description="Field order.")]
    target_size: Annotated[
        NonNegativeInt,
        Field(
            title="Target size",
            description="Size of the sets searched for.",
        ),
    ]
    mode: Annotated[
        SearchMode,
        Field(
            title="Mode",
            description="Search strategy.",
        ),
    ] = SearchMode.EXHAUSTIVE
    budget: Annotated[
        PositiveInt | None,
        Field(
            title="Budget",
            description="Node or trial limit.",
        ),
    ] = None
    seed: Annotated[
        NonNegativeInt,
        Field(
            title="Seed",
            description="Seed of randomized searches.",
            lt=1 << 64,
        ),
    ] = 0
    workers: Annotated[
        PositiveInt,
        Field(
            title="Workers",
            description="Number of worker processes.",
        ),
    ] = 1
    up_to_orbit: Annotated[
        bool,
        Field(
            title="Up to orbit",
            description="Keep one set per group orbit.",
        ),
    ] = False

    @model_validator(mode="after")
    def check_orbit_dedup(self) -> Self:
        """Ensure orbit deduplication is only requested where it is supported."""
        if self.up_to_orbit and (self.q != 2 or self.k > ORBIT_DIMENSION_CAP):  # noqa: PLR2004
            msg = "Orbit deduplication needs q = 2 and k <= 4."
            raise InputValidationError(error=ValueError(msg))
        return self


class SearchResult(LockedModel):
    """Search outcome.

    Attributes:
        found (tuple[PointSet, ...]): Strong blocking sets found, by mask.
        nodes_explored (NonNegativeInt): Subsets, search nodes or trials
            processed.
        exhausted (bool): Whether the whole space was covered, in which case
            `found` is complete.

    """

    found: Annotated[
        tuple[PointSet, ...],
        Field(
            title="Found",
            description="Strong blocking sets found.",
        ),
    ] = ()
    nodes_explored: Annotated[
        NonNegativeInt,
        Field(
            title="Nodes explored",
            description="Subsets, search nodes or trials processed.",
        ),
    ]
    exhausted: Annotated[
        bool,
        Field(
            title="Exhausted",
            description="Whether the whole space was covered.",
        ),
    ]


def _verified(
    geometry: Geometry,
    masks: Iterable[int],
    *,
    up_to_orbit: bool = False,
) -> tuple[PointSet, ...]:
    """Re-verify, deduplicate and sort the masks returned by a search.

    Raises:
        SoundnessError: If some mask is not a strong blocking set.

    """
    unique = sorted(set(masks))
    for mask in unique:
        if not is_strong_blocking_set(geometry.pointset(mask)).is_strong:
            logger.error("Search returned a set that is not strong: %#x.", mask)
            raise SoundnessError(mask)
    if up_to_orbit:
        group = build_group(geometry)
        seen: set[int] = set()
        kept: list[int] = []
        for mask in unique:
            canonical = int(group.images(mask).min())
            if canonical not in seen:
                seen.add(canonical)
                kept.append(canonical)
        unique = sorted(kept)
    return tuple(geometry.pointset(mask) for mask in unique)


def _run[Result](
    func: Callable[..., Result],
    args: Sequence[tuple],
    workers: int,
    progress: Progress | None = None,
) -> list[Result]:
    """Run work units in order, in worker processes when `workers > 1`."""
    results: list[Result] = []
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            for result in executor.map(func, *zip(*args, strict=True)):
                results.append(result)
                if progress is not None:
                    progress(len(results), len(args))
    else:
        for arg in args:
            results.append(func(*arg))
            if progress is not None:
                progress(len(results), len(args))
    return results


def _scan_range(k: int, q: int, size: int, start: int, stop: int) -> list[int]:
    geometry = build_geometry(k, q)
    return [
        mask
        for mask in subset_masks(len(geometry.points), size, start, stop)
        if is_strong_mask(geometry, mask)
    ]


def find_all_sbs(
    geometry: Geometry,
    size: int,
    *,
    workers: int = 1,
    up_to_orbit: bool = False,
    progress: Progress | None = None,
    budgets: Budgets | None = None,
) -> SearchResult:
    """Find every strong blocking set of a given size by exhaustive scan.

    Args:
        geometry (Geometry): The ambient space.
        size (int): Size of the sets.
        workers (int): Number of worker processes.
        up_to_orbit (bool): Keep one set per orbit (q = 2, k <= 4).
        progress (Progress | None): Called after each work unit.
        budgets (Budgets | None): Caps; `C(n, size)` must not exceed
            `budgets.subsets`.

    Returns:
        out (SearchResult): The complete list of sets, `exhausted = True`.

    Raises:
        BudgetExceededError: If there are too many subsets.

    """
    budgets = budgets or Budgets.from_env()
    n = len(geometry.points)
    total = comb(n, size)
    require(
        "subsets",
        total,
        budgets.subsets,
        hint="Use the pruned-exhaustive mode for larger spaces.",
    )
    logger.info("Scanning %d subsets of size %d of %s.", total, size, geometry.name)

    units = partition(total, max(workers, -(-total // UNIT)))
    args = [(geometry.k, geometry.q, size, start, stop) for start, stop in units]
    masks = [m for found in _run(_scan_range, args, workers, progress) for m in found]

    result = SearchResult(
        found=_verified(geometry, masks, up_to_orbit=up_to_orbit),
        nodes_explored=total,
        exhausted=True,
    )
    logger.info("Found %d strong blocking sets.", len(result.found))
    return result


def naive_enumeration(geometry: Geometry, size: int) -> tuple[int, ...]:
    """Return the masks of all strong blocking sets of a size, unpruned.

    Each subset is checked against the definition directly: the span of its
    intersection with every hyperplane must be the whole hyperplane.
    """
    budgets = Budgets.from_env()
    require("subsets", comb(len(geometry.points), size), budgets.subsets)
    found: list[int] = []
    for chosen in combinations(range(len(geometry.points)), size):
        mask = geometry.mask_of(chosen)
        if all(
            geometry.closure(mask & h) == h for h in geometry.point_in_hyperplane
        ):
            found.append(mask)
    return tuple(found)


def partition_prefixes(
    n: int,
    size: int,
    depth: int = PREFIX_DEPTH,
) -> list[tuple[int, int]]:
    """Split the subsets of a size into prefix work units.

    Each unit fixes which of the first `depth` points are chosen and leaves
    the remaining points eligible. Units that cannot reach `size` points are
    dropped.

    Returns:
        out (list[tuple[int, int]]): `(chosen, eligible)` mask pairs in
            increasing order of `chosen`.

    """
    depth = min(depth, n)
    rest = ((1 << n) - 1) & ~((1 << depth) - 1)
    return [
        (chosen, rest)
        for chosen in range(1 << depth)
        if chosen.bit_count() <= size <= chosen.bit_count() + n - depth
    ]


class Pruner:
    """Include/exclude search below one work unit."""

    __slots__ = ("found", "geometry", "limit", "need", "nodes", "size")

    def __init__(self, geometry: Geometry, size: int, limit: int) -> None:
        """Prepare a search for sets of `size` points within `limit` nodes."""
        self.geometry = geometry
        self.size = size
        self.limit = limit
        self.need = geometry.k - 1
        self.nodes = 0
        self.found: list[int] = []

    def hopeless(self, chosen: int, eligible: int, remaining: int) -> bool:
        """Check whether no completion of `chosen` can be strong.

        A branch is discarded when some hyperplane H satisfies
        rank(chosen ∩ H) + min(remaining, |eligible ∩ H|) < k - 1.
        """
        if eligible.bit_count() < remaining:
            return True
        geometry = self.geometry
        for hyperplane in geometry.point_in_hyperplane:
            reachable = min(remaining, (eligible & hyperplane).bit_count())
            if reachable >= self.need:
                continue
            section = chosen & hyperplane
            if section.bit_count() + reachable < self.need:
                return True
            if geometry.rank(section, self.need) + reachable < self.need:
                return True
        return False

    def branch_point(self, chosen: int, eligible: int) -> int:
        """Return the eligible point on the most under-filled hyperplanes."""
        geometry = self.geometry
        deficient = {
            j
            for j, h in enumerate(geometry.point_in_hyperplane)
            if (chosen & h).bit_count() < self.need
        }
        return max(
            iter_bits(eligible),
            key=lambda i: (
                sum(1 for j in geometry.hyperplanes_on_point[i] if j in deficient),
                -i,
            ),
        )

    def visit(self, chosen: int, eligible: int) -> bool:
        """Search below a node; return False once the node limit is hit."""
        self.nodes += 1
        if self.nodes > self.limit:
            return False
        remaining = self.size - chosen.bit_count()
        if remaining == 0:
            if is_strong_mask(self.geometry, chosen):
                self.found.append(chosen)
            return True
        if self.hopeless(chosen, eligible, remaining):
            return True
        if eligible.bit_count() == remaining:
            if is_strong_mask(self.geometry, chosen | eligible):
                self.found.append(chosen | eligible)
            return True

        point = self.branch_point(chosen, eligible)
        bit = 1 << point
        return self.visit(chosen | bit, eligible & ~bit) and self.visit(
            chosen,
            eligible & ~bit,
        )


def _prune_unit(
    k: int,
    q: int,
    size: int,
    chosen: int,
    eligible: int,
    limit: int,
) -> tuple[list[int], int, bool]:
    pruner = Pruner(build_geometry(k, q), size, limit)
    completed = pruner.visit(chosen, eligible)
    return pruner.found, min(pruner.nodes, limit), completed


def _check_config(
    geometry: Geometry,
    size: int,
    config: SearchConfig | None,
    mode: SearchMode,
) -> SearchConfig:
    config = config or SearchConfig(
        k=geometry.k,
        q=geometry.q,
        target_size=size,
        mode=mode,
    )
    if (config.k, config.q) != (geometry.k, geometry.q):
        raise GeometryMismatchError(
            expected=(geometry.k, geometry.q),
            actual=(config.k, config.q),
        )
    if config.mode is not mode or config.target_size != size:
        msg = (
            f"Configuration for {config.mode.value} at size {config.target_size} "
            f"passed to a {mode.value} search at size {size}."
        )
        raise PreconditionError(message=msg)
    return config


def prove_nonexistence(
    geometry: Geometry,
    size: int,
    config: SearchConfig | None = None,
    *,
    progress: Progress | None = None,
    budgets: Budgets | None = None,
) -> SearchResult:
    """Search all subsets of a size exhaustively with sound pruning.

    The subset space is split into the units of `partition_prefixes()`, each
    given an equal share of the node budget. Within a unit the search
    branches on whether to include the eligible point lying on the most
    under-filled hyperplanes. A branch is cut only when some hyperplane can
    no longer reach rank k - 1, so an exhausted run with nothing found
    proves that no strong blocking set of that size exists.

    Args:
        geometry (Geometry): The ambient space.
        size (int): Size of the sets.
        config (SearchConfig | None): Pruned-exhaustive configuration; its
            `budget` is the node limit and `workers` the process count.
        progress (Progress | None): Called after each work unit.
        budgets (Budgets | None): Default node limit `budgets.nodes`.

    Returns:
        out (SearchResult): `exhausted` is False when some unit ran out of
            nodes; `found` is then the partial result.

    Raises:
        GeometryMismatchError: If `config` is for another space.
        PreconditionError: If `config` is not a pruned-exhaustive search of
            this size.

    """
    budgets = budgets or Budgets.from_env()
    config = _check_config(geometry, size, config, SearchMode.PRUNED)
    limit = config.budget or budgets.nodes

    units = partition_prefixes(len(geometry.points), size)
    share = max(1, limit // max(1, len(units)))
    logger.info(
        "Pruned search for size %d in %s: %d units, %d nodes each.",
        size,
        geometry.name,
        len(units),
        share,
    )
    args = [
        (geometry.k, geometry.q, size, chosen, eligible, share)
        for chosen, eligible in units
    ]
    results = _run(_prune_unit, args, config.workers, progress)

    masks = [m for found, _, _ in results for m in found]
    exhausted = all(completed for _, _, completed in results)
    if not exhausted:
        logger.warning(
            "Node budget of %d exhausted in %d of %d units; coverage is partial.",
            limit,
            sum(1 for _, _, completed in results if not completed),
            len(units),
        )
    result = SearchResult(
        found=_verified(geometry, masks, up_to_orbit=config.up_to_orbit),
        nodes_explored=sum(nodes for _, nodes, _ in results),
        exhausted=exhausted,
    )
    logger.info(
        "Pruned search explored %d nodes and found %d sets.",
        result.nodes_explored,
        len(result.found),
    )
    return result


def disjoint_union(geometry: Geometry, lines: Iterable[int]) -> PointSet:
    """Return the union of pairwise disjoint lines.

    Raises:
        PreconditionError: If two of the lines share a point.

    """
    mask = 0
    for j in lines:
        line = geometry.lines[j].mask
        if mask & line:
            msg = f"Line {j} meets an earlier line."
            raise PreconditionError(message=msg)
        mask |= line
    return geometry.pointset(mask)


def _sample_unit(
    k: int,
    q: int,
    line_count: int,
    seed: int,
    worker: int,
    trials: int,
) -> list[int]:
    geometry = build_geometry(k, q)
    lines = [ln.mask for ln in geometry.lines]
    rng = np.random.default_rng([seed, worker])
    found: list[int] = []
    for _ in range(trials):
        mask = 0
        picked = 0
        for j in rng.permutation(len(lines)):
            if not mask & lines[j]:
                mask |= lines[j]
                picked += 1
                if picked == line_count:
                    break
        if picked == line_count and is_strong_mask(geometry, mask):
            found.append(mask)
    return found


@binary
def search_line_union(
    geometry: Geometry,
    line_count: int,
    config: SearchConfig | None = None,
    *,
    budgets: Budgets | None = None,
) -> SearchResult:
    """Search for strong blocking sets among unions of disjoint lines.

    Each trial shuffles the lines and greedily keeps those disjoint from the
    lines kept so far, until `line_count` lines are kept. Worker w draws from
    a generator seeded with `(seed, w)`.

    Args:
        geometry (Geometry): PG(k-1, 2).
        line_count (int): Number of lines per union.
        config (SearchConfig | None): Randomized-line-union configuration;
            its `budget` is the trial count.
        budgets (Budgets | None): Default trial count `budgets.trials`.

    Returns:
        out (SearchResult): Successes within the budget; `exhausted` is
            always False.

    Raises:
        GeometryMismatchError: If the geometry is not over GF(2), or
            `config` is for another space.
        PreconditionError: If `config` is not a line-union search for
            `line_count` lines.

    """
    budgets = budgets or Budgets.from_env()
    size = line_count * (geometry.q + 1)
    config = _check_config(geometry, size, config, SearchMode.LINE_UNION)
    trials = config.budget or budgets.trials

    logger.info(
        "Sampling %d unions of %d disjoint lines in %s (seed %d).",
        trials,
        line_count,
        geometry.name,
        config.seed,
    )
    args = [
        (geometry.k, geometry.q, line_count, config.seed, worker, stop - start)
        for worker, (start, stop) in enumerate(partition(trials, config.workers))
    ]
    masks = [m for found in _run(_sample_unit, args, config.workers) for m in found]
    result = SearchResult(
        found=_verified(geometry, masks, up_to_orbit=config.up_to_orbit),
        nodes_explored=trials,
        exhausted=False,
    )
    if not result.found:
        logger.warning("No strong line union found within %d trials.", trials)
    return result
