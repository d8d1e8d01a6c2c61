from __future__ import annotations

import pytest

from strong_blocking_sets import (
    Configuration,
    Geometry,
    build_geometry,
    check_contained_lines,
    check_plane_sections,
    corollary_bound,
    is_minimal_strong_blocking_set,
    is_strong_blocking_set,
    lower_bound,
    parabolic_quadric,
    remark_witnesses,
)
from strong_blocking_sets.blocking import failing_hyperplanes, is_strong_mask
from strong_blocking_sets.enumeration import subset_masks
from strong_blocking_sets.errors import (
    FieldError,
    GeometryMismatchError,
    InputValidationError,
    PreconditionError,
)
from strong_blocking_sets.geometry import iter_bits


class TestStrongBlocking:
    def test_quadric(self, quadric) -> None:
        report = is_strong_blocking_set(quadric)
        assert report.is_strong
        assert report.size == 9
        assert report.failing_hyperplanes == ()
        assert report.signature == {5: 9, 3: 6}
        assert sum(report.intersection_profile) == 63

    def test_whole_space(self, pg32: Geometry) -> None:
        assert is_strong_blocking_set(pg32.pointset(pg32.full)).is_strong

    def test_plane(self, pg32: Geometry) -> None:
        plane = pg32.pointset(pg32.hyperplanes[0].mask)
        report = is_strong_blocking_set(plane)
        assert not report.is_strong
        assert len(report.failing_hyperplanes) == 1
        total = is_strong_blocking_set(plane, total=True)
        assert total.failing_hyperplanes == tuple(range(1, 15))

    def test_fano_plane_minus_a_point(self, pg22: Geometry) -> None:
        points = pg22.pointset(pg22.full & ~1)
        assert is_strong_blocking_set(points).is_strong
        assert is_minimal_strong_blocking_set(points)

    def test_empty_set(self, pg32: Geometry) -> None:
        report = is_strong_blocking_set(pg32.pointset(0))
        assert not report.is_strong
        assert report.failing_hyperplanes == tuple(range(15))
        assert report.intersection_profile == (0,) * 15

    def test_ternary_line(self) -> None:
        pg = build_geometry(2, 3)
        assert is_strong_blocking_set(pg.pointset(pg.full)).is_strong
        assert not is_strong_blocking_set(pg.pointset(pg.full & ~1)).is_strong

    def test_supersets_stay_strong(self, pg32: Geometry, quadric) -> None:
        for i in range(15):
            assert is_strong_mask(pg32, quadric.mask | 1 << i)

    def test_failures_agree_with_rank(self, pg32: Geometry, quadric) -> None:
        mask = quadric.mask & ~1
        failures = failing_hyperplanes(pg32, mask, total=True)
        expected = tuple(
            j
            for j, h in enumerate(pg32.point_in_hyperplane)
            if pg32.rank(mask & h) < 3
        )
        assert failures == expected
        assert failures


class TestBounds:
    @pytest.mark.parametrize(
        ("k", "q", "bound"),
        [(3, 2, 6), (4, 2, 9), (5, 2, 12), (3, 3, 8), (4, 5, 18)],
    )
    def test_lower_bound(self, k: int, q: int, bound: int) -> None:
        assert lower_bound(k, q) == bound

    def test_corollary_bound(self) -> None:
        assert corollary_bound(5) == 12

    def test_rejects_small_dimension(self) -> None:
        with pytest.raises(InputValidationError):
            lower_bound(1, 2)

    def test_rejects_composite_order(self) -> None:
        with pytest.raises(FieldError):
            lower_bound(4, 4)

    def test_minimal_needs_bound(self, pg32: Geometry, quadric) -> None:
        assert is_minimal_strong_blocking_set(quadric)
        assert not is_minimal_strong_blocking_set(pg32.pointset(pg32.full))


class TestStructuralChecks:
    def test_quadric_passes(self, quadric) -> None:
        sections = check_plane_sections(quadric)
        assert sections.holds
        assert max(sections.profile) == 5
        lines = check_contained_lines(quadric)
        assert lines.holds
        assert lines.counts == (2,) * 9

    def test_point_and_plane_complement(self, pg32: Geometry) -> None:
        points = remark_witnesses(pg32)[Configuration.POINT_AND_PLANE_COMPLEMENT]
        assert check_plane_sections(points).holds
        assert check_plane_sections(points).profile.count(1) == 1
        assert not check_contained_lines(points).holds
        assert not is_strong_blocking_set(points).is_strong

    def test_plane_and_two_points(self, pg32: Geometry) -> None:
        points = remark_witnesses(pg32)[Configuration.PLANE_AND_TWO_POINTS]
        sections = check_plane_sections(points)
        assert not sections.holds
        assert sections.oversized == (0,)
        assert not check_contained_lines(points).holds

    @pytest.mark.parametrize(
        "configuration",
        [
            Configuration.PUNCTURED_PLANE_OFF_LINE,
            Configuration.PUNCTURED_PLANE_ON_LINE,
        ],
    )
    def test_six_coplanar_points(
        self,
        pg32: Geometry,
        configuration: Configuration,
    ) -> None:
        points = remark_witnesses(pg32)[configuration]
        sections = check_plane_sections(points)
        assert not sections.holds
        assert 0 in sections.oversized

    def test_point_off_the_plane_fails(self, pg32: Geometry) -> None:
        points = remark_witnesses(pg32)[Configuration.PLANE_AND_TWO_POINTS]
        report = check_contained_lines(points)
        assert not report.holds
        off_plane = points.mask & ~pg32.hyperplanes[0].mask
        lonely = [
            i
            for i, count in zip(points.indices, report.counts, strict=True)
            if count == 1
        ]
        assert lonely == list(iter_bits(off_plane))
        assert set(lonely) <= set(report.violations)

    def test_no_point_is_isolated(self, pg32: Geometry) -> None:
        # Six missing points cannot meet all seven lines through a point.
        lowest = min(
            min(check_contained_lines(pg32.pointset(mask)).counts)
            for mask in subset_masks(15, 9)
        )
        assert lowest == 1

    def test_needs_nine_points(self, pg32: Geometry) -> None:
        with pytest.raises(PreconditionError):
            check_plane_sections(pg32.pointset(range(8)))
        with pytest.raises(PreconditionError):
            check_contained_lines(pg32.pointset(range(10)))

    def test_needs_pg32(self, pg22: Geometry) -> None:
        with pytest.raises(GeometryMismatchError):
            check_plane_sections(pg22.pointset(range(7)))


def test_parabolic_quadric(pg42: Geometry) -> None:
    report = is_strong_blocking_set(parabolic_quadric(pg42))
    assert report.is_strong
    assert report.size == 15
