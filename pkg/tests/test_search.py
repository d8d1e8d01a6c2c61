from __future__ import annotations

import os
from functools import reduce
from itertools import combinations
from math import comb
from operator import or_
from pathlib import Path
from typing import TYPE_CHECKING

import pytest

from strong_blocking_sets import (
    Budgets,
    Geometry,
    Group,
    SearchConfig,
    SearchMode,
    build_geometry,
    code_from_pointset,
    find_all_sbs,
    is_minimal_code,
    is_strong_blocking_set,
    orbit,
    prove_nonexistence,
    search_line_union,
    write_pointsets,
)
from strong_blocking_sets.errors import (
    BudgetExceededError,
    GeometryMismatchError,
    InputValidationError,
    PreconditionError,
)
from strong_blocking_sets.formats import read_pointset
from strong_blocking_sets.search import (
    disjoint_union,
    naive_enumeration,
    partition_prefixes,
)

if TYPE_CHECKING:
    from strong_blocking_sets import PointSet


def pruned(geometry: Geometry, size: int, **kwargs: object) -> SearchConfig:
    return SearchConfig(
        k=geometry.k,
        q=geometry.q,
        target_size=size,
        mode=SearchMode.PRUNED,
        **kwargs,
    )


def line_union(geometry: Geometry, lines: int, **kwargs: object) -> SearchConfig:
    return SearchConfig(
        k=geometry.k,
        q=geometry.q,
        target_size=lines * (geometry.q + 1),
        mode=SearchMode.LINE_UNION,
        **kwargs,
    )


def masks(result) -> list[int]:
    return [points.mask for points in result.found]


class TestExhaustive:
    def test_quadrics(self, pg32: Geometry, gl42: Group, quadric) -> None:
        result = find_all_sbs(pg32, 9)
        assert result.exhausted
        assert result.nodes_explored == 5005
        assert len(result.found) == 280
        assert set(masks(result)) == orbit(quadric, gl42)

    def test_below_bound(self, pg32: Geometry) -> None:
        result = find_all_sbs(pg32, 8)
        assert result.found == ()
        assert result.exhausted

    def test_fano_plane(self, pg22: Geometry) -> None:
        result = find_all_sbs(pg22, 6)
        assert sorted(masks(result)) == sorted(pg22.full & ~(1 << i) for i in range(7))
        assert find_all_sbs(pg22, 5).found == ()

    def test_up_to_orbit(self, pg32: Geometry, gl42: Group, quadric) -> None:
        result = find_all_sbs(pg32, 9, up_to_orbit=True)
        assert masks(result) == [min(orbit(quadric, gl42))]

    def test_workers_agree(self, pg32: Geometry) -> None:
        assert find_all_sbs(pg32, 9, workers=2) == find_all_sbs(pg32, 9)

    def test_budget(self, pg32: Geometry) -> None:
        with pytest.raises(BudgetExceededError, match="pruned-exhaustive"):
            find_all_sbs(pg32, 9, budgets=Budgets(subsets=1000))

    @pytest.mark.parametrize("size", range(8))
    def test_naive_agreement_fano(self, pg22: Geometry, size: int) -> None:
        assert sorted(naive_enumeration(pg22, size)) == masks(find_all_sbs(pg22, size))

    @pytest.mark.parametrize("size", [8, 9])
    def test_naive_agreement_pg32(self, pg32: Geometry, size: int) -> None:
        assert sorted(naive_enumeration(pg32, size)) == masks(find_all_sbs(pg32, size))


class TestPruned:
    def test_quadrics(self, pg32: Geometry) -> None:
        result = prove_nonexistence(pg32, 9)
        assert result.exhausted
        assert masks(result) == masks(find_all_sbs(pg32, 9))

    def test_below_bound(self, pg22: Geometry, pg32: Geometry) -> None:
        for geometry, size in ((pg22, 5), (pg32, 8)):
            result = prove_nonexistence(geometry, size)
            assert result.exhausted
            assert result.found == ()

    @pytest.mark.parametrize("size", range(8))
    def test_naive_agreement_fano(self, pg22: Geometry, size: int) -> None:
        result = prove_nonexistence(pg22, size)
        assert masks(result) == sorted(naive_enumeration(pg22, size))

    def test_ternary_plane(self) -> None:
        pg = build_geometry(3, 3)
        assert prove_nonexistence(pg, 8).found == ()
        assert masks(prove_nonexistence(pg, 9)) == masks(find_all_sbs(pg, 9))
        assert prove_nonexistence(pg, 9).found

    def test_workers_agree(self, pg32: Geometry) -> None:
        serial = prove_nonexistence(pg32, 9, pruned(pg32, 9))
        parallel = prove_nonexistence(pg32, 9, pruned(pg32, 9, workers=2))
        assert parallel == serial

    def test_node_budget(self, pg32: Geometry) -> None:
        result = prove_nonexistence(pg32, 9, pruned(pg32, 9, budget=16))
        assert not result.exhausted
        assert result.nodes_explored <= 16
        assert all(is_strong_blocking_set(p).is_strong for p in result.found)

    def test_up_to_orbit(self, pg32: Geometry) -> None:
        result = prove_nonexistence(pg32, 9, pruned(pg32, 9, up_to_orbit=True))
        assert len(result.found) == 1

    def test_config_mismatch(self, pg22: Geometry, pg32: Geometry) -> None:
        with pytest.raises(GeometryMismatchError):
            prove_nonexistence(pg32, 9, pruned(pg22, 9))
        with pytest.raises(PreconditionError):
            prove_nonexistence(pg32, 9, pruned(pg32, 8))
        with pytest.raises(PreconditionError):
            prove_nonexistence(pg32, 9, line_union(pg32, 3))

    def test_orbit_dedup_limits(self) -> None:
        with pytest.raises(InputValidationError):
            SearchConfig(k=5, q=2, target_size=12, up_to_orbit=True)
        with pytest.raises(InputValidationError):
            SearchConfig(k=3, q=3, target_size=8, up_to_orbit=True)


class TestPrefixes:
    @pytest.mark.parametrize(("n", "size"), [(7, 3), (15, 9), (3, 2), (31, 12)])
    def test_units_cover_every_subset_once(self, n: int, size: int) -> None:
        units = partition_prefixes(n, size)
        covered = sum(
            comb(eligible.bit_count(), size - chosen.bit_count())
            for chosen, eligible in units
        )
        assert covered == comb(n, size)
        assert len({chosen for chosen, _ in units}) == len(units)

    def test_units_do_not_depend_on_workers(self) -> None:
        assert partition_prefixes(15, 9) == partition_prefixes(15, 9, 4)
        assert len(partition_prefixes(15, 9)) == 16


class TestLineUnion:
    def test_quadrics(self, pg32: Geometry, gl42: Group, quadric) -> None:
        result = search_line_union(pg32, 3, line_union(pg32, 3, budget=200, seed=5))
        assert not result.exhausted
        assert result.nodes_explored == 200
        assert result.found
        assert set(masks(result)) <= orbit(quadric, gl42)

    def test_deterministic(self, pg32: Geometry) -> None:
        config = line_union(pg32, 3, budget=100, seed=42, workers=2)
        assert search_line_union(pg32, 3, config) == search_line_union(pg32, 3, config)

    def test_too_many_lines(self, pg22: Geometry) -> None:
        result = search_line_union(pg22, 2, line_union(pg22, 2, budget=20))
        assert result.found == ()

    def test_disjoint_union(self, pg32: Geometry) -> None:
        first, second = pg32.lines_on_point[0][:2]
        with pytest.raises(PreconditionError):
            disjoint_union(pg32, [first, second])
        skew = next(
            j for j, ln in enumerate(pg32.lines) if not ln.mask & pg32.lines[first].mask
        )
        assert len(disjoint_union(pg32, [first, skew])) == 6

    def test_needs_binary_field(self) -> None:
        with pytest.raises(GeometryMismatchError):
            search_line_union(build_geometry(3, 3), 2)


@pytest.mark.slow
def test_no_twelve_point_set_in_pg42(pg42: Geometry) -> None:
    config = pruned(pg42, 12, workers=os.cpu_count() or 1)
    result = prove_nonexistence(pg42, 12, config)
    assert result.exhausted
    assert result.found == ()


LINE_UNION_FIXTURE: Path = Path(__file__).parent / "fixtures" / "pg52_line_union.txt"


def check_line_union(points: PointSet, line_count: int) -> None:
    geometry = points.geometry
    assert len(points) == line_count * 3
    assert is_strong_blocking_set(points).is_strong
    assert is_minimal_code(code_from_pointset(points)).minimal
    contained = [
        j for j, line in enumerate(geometry.lines) if not line.mask & ~points.mask
    ]
    assert any(
        reduce(or_, (geometry.lines[j].mask for j in combo)) == points.mask
        and disjoint_union(geometry, combo) == points
        for combo in combinations(contained, line_count)
    )


def test_archived_line_union_in_pg52() -> None:
    points = read_pointset(LINE_UNION_FIXTURE)
    assert (points.geometry.k, points.geometry.q) == (6, 2)
    check_line_union(points, 5)


@pytest.mark.slow
def test_line_unions_in_pg52(tmp_path: Path) -> None:
    pg = build_geometry(6, 2)
    config = line_union(pg, 5, budget=20000, seed=2024, workers=os.cpu_count() or 1)
    result = search_line_union(pg, 5, config)
    for points in result.found:
        check_line_union(points, 5)
    if result.found:
        path = tmp_path / LINE_UNION_FIXTURE.name
        write_pointsets(path, result.found[:1], comment="first line-union hit")
        assert read_pointset(path) == result.found[0]
