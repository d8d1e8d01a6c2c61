from __future__ import annotations

from itertools import combinations

import pytest

from strong_blocking_sets import (
    Budgets,
    FieldElement,
    Geometry,
    build_geometry,
    hyperbolic_quadric,
    lines_through,
    parabolic_quadric,
    pencil_through,
    quadric_rulings,
    rank_gf,
    span,
)
from strong_blocking_sets.errors import (
    EmptySpanError,
    FieldError,
    GeometryCapError,
    GeometryMismatchError,
    InputValidationError,
    PreconditionError,
)
from strong_blocking_sets.field import Basis, BinaryBasis
from strong_blocking_sets.geometry import (
    ProjPoint,
    plane_complement,
    punctured_plane,
)


class TestRankGF:
    def test_identity(self) -> None:
        identity = [[int(i == j) for j in range(4)] for i in range(4)]
        assert rank_gf(identity, 2).rank == 4

    def test_zero_matrix(self) -> None:
        echelon = rank_gf([[0] * 5 for _ in range(3)], 2)
        assert echelon.rank == 0
        assert echelon.basis == ()

    def test_quadric_columns_span(self, quadric) -> None:
        columns = quadric.coords
        rows = [[c[i] for c in columns] for i in range(4)]
        assert rank_gf(rows, 2).rank == 4

    def test_canonical_basis(self) -> None:
        first = rank_gf([[1, 1, 0], [0, 1, 1]], 2).basis
        second = rank_gf([[1, 0, 1], [1, 1, 0]], 2).basis
        assert first == second == ((1, 0, 1), (0, 1, 1))

    def test_ternary(self) -> None:
        assert rank_gf([[1, 2, 0], [2, 1, 0], [0, 0, 1]], 3).rank == 2

    def test_rejects_composite_order(self) -> None:
        with pytest.raises(FieldError):
            rank_gf([[1, 0], [0, 1]], 4)

    def test_rejects_out_of_range_entries(self) -> None:
        with pytest.raises(InputValidationError):
            rank_gf([[0, 2]], 2)

    def test_rejects_ragged_rows(self) -> None:
        with pytest.raises(InputValidationError):
            rank_gf([[1, 0], [1]], 2)


class TestFieldElement:
    def test_arithmetic(self) -> None:
        a = FieldElement(value=3, q=7)
        b = FieldElement(value=5, q=7)
        assert (a * b).value == 1
        assert (a + b).value == 1
        assert (a - b).value == 5
        assert (-a).value == 4
        assert (a / a).value == 1
        assert (a * a.inverse()).value == 1

    def test_zero_has_no_inverse(self) -> None:
        with pytest.raises(InputValidationError):
            FieldElement(value=0, q=5).inverse()

    def test_rejects_out_of_range(self) -> None:
        with pytest.raises(InputValidationError):
            FieldElement(value=7, q=7)

    def test_rejects_mixed_fields(self) -> None:
        with pytest.raises(InputValidationError):
            FieldElement(value=1, q=3) + FieldElement(value=1, q=5)


class TestBases:
    def test_basis_matches_rank_gf(self) -> None:
        vectors = [(0, 1, 2), (1, 0, 1), (1, 1, 0), (2, 2, 0)]
        basis = Basis(3)
        basis.extend(vectors)
        assert basis.rank == rank_gf(vectors, 3).rank == 2
        assert basis.contains((1, 2, 2))
        assert not basis.contains((0, 0, 1))

    def test_binary_basis(self) -> None:
        basis = BinaryBasis()
        assert basis.extend([0b0011, 0b0101, 0b0110, 0b1000]) == 3
        assert basis.contains(0b1110)
        assert not basis.contains(0b0001)

    def test_extend_stops_at_rank(self) -> None:
        basis = BinaryBasis()
        assert basis.extend([1, 2, 4, 8], stop=2) == 2


class TestBuildGeometry:
    def test_pg32_census(self, pg32: Geometry) -> None:
        assert len(pg32.points) == 15
        assert len(pg32.lines) == 35
        assert len(pg32.hyperplanes) == 15
        assert all(len(lines) == 7 for lines in pg32.lines_on_point)
        assert all(len(planes) == 7 for planes in pg32.hyperplanes_on_point)
        assert all(line.size == 3 for line in pg32.lines)
        for line in pg32.lines:
            planes = [h for h in pg32.hyperplanes if h.mask & line.mask == line.mask]
            assert len(planes) == 3

    def test_fano_plane(self, pg22: Geometry) -> None:
        assert len(pg22.points) == 7
        assert len(pg22.lines) == 7
        assert pg22.name == "PG(2,2)"

    def test_pg42_counts(self, pg42: Geometry) -> None:
        assert len(pg42.points) == 31
        assert len(pg42.hyperplanes) == 31

    def test_ternary_plane(self) -> None:
        pg = build_geometry(3, 3)
        assert len(pg.points) == 13
        assert len(pg.lines) == 13
        assert all(line.size == 4 for line in pg.lines)

    def test_canonical_order(self, pg32: Geometry) -> None:
        coords = [p.coords for p in pg32.points]
        assert coords == sorted(coords)
        assert coords[0] == (0, 0, 0, 1)
        assert coords[-1] == (1, 1, 1, 1)
        assert all(p.index == i for i, p in enumerate(pg32.points))

    def test_cached(self) -> None:
        assert build_geometry(4, 2) is build_geometry(4, 2)

    def test_incidence_agrees_with_dot_product(self, pg32: Geometry) -> None:
        for j, hyperplane in enumerate(pg32.point_in_hyperplane):
            dual = pg32.points[j].coords
            for i, point in enumerate(pg32.points):
                dot = sum(a * b for a, b in zip(dual, point.coords, strict=True))
                on = dot % 2 == 0
                assert bool(hyperplane >> i & 1) == on

    def test_rejects_composite_order(self) -> None:
        with pytest.raises(FieldError):
            build_geometry(3, 4)

    def test_rejects_small_dimension(self) -> None:
        with pytest.raises(InputValidationError):
            build_geometry(1, 2)

    def test_dimension_cap(self) -> None:
        with pytest.raises(GeometryCapError):
            build_geometry(9, 2)

    def test_points_cap(self) -> None:
        with pytest.raises(GeometryCapError):
            build_geometry(5, 2, budgets=Budgets(max_points=20))

    def test_field_cap(self) -> None:
        with pytest.raises(FieldError):
            build_geometry(2, 11)


class TestPoints:
    def test_normalize(self) -> None:
        assert ProjPoint.normalize((0, 2, 1), 3) == (0, 1, 2)
        assert ProjPoint.normalize((4, 5, 1), 3) == (1, 2, 1)

    def test_normalize_rejects_zero(self) -> None:
        with pytest.raises(InputValidationError):
            ProjPoint.normalize((0, 3, 0), 3)

    def test_rejects_unnormalized(self) -> None:
        with pytest.raises(InputValidationError):
            ProjPoint(coords=(2, 1), index=0, q=3)

    def test_index_of_scalar_multiples(self) -> None:
        pg = build_geometry(3, 3)
        assert pg.index_of((0, 2, 1)) == pg.index_of((0, 1, 2))

    def test_index_of_wrong_length(self, pg32: Geometry) -> None:
        with pytest.raises(GeometryMismatchError):
            pg32.index_of((1, 0, 0))


class TestSpan:
    def test_single_point(self, pg32: Geometry) -> None:
        sub = span(pg32.pointset([3]))
        assert sub.dimension == 0
        assert sub.mask == 1 << 3

    def test_two_points_give_a_line(self, pg32: Geometry) -> None:
        sub = span(pg32.pointset([0, 1]))
        assert sub.dimension == 1
        assert sub.size == 3

    def test_three_points_give_a_plane(self, pg32: Geometry) -> None:
        sub = span(pg32.pointset([(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0)]))
        assert sub.dimension == 2
        assert sub.size == 7

    def test_empty(self, pg32: Geometry) -> None:
        with pytest.raises(EmptySpanError):
            span(pg32.pointset([]))

    def test_idempotent_and_monotone(self, pg32: Geometry) -> None:
        for a, b in combinations(range(15), 2):
            small = span(pg32.pointset([a]))
            large = span(pg32.pointset([a, b]))
            assert span(pg32.pointset(large.mask)).mask == large.mask
            assert small.mask & large.mask == small.mask


class TestPencils:
    def test_line_lies_on_three_planes(self, pg32: Geometry) -> None:
        assert len(pencil_through(pg32.lines[0], pg32)) == 3

    def test_point_lies_on_seven_planes(self, pg32: Geometry) -> None:
        point = span(pg32.pointset([5]))
        assert len(pencil_through(point, pg32)) == 7

    def test_lines_through_point(self, pg22: Geometry, pg32: Geometry) -> None:
        assert len(lines_through(0, pg32)) == 7
        assert len(lines_through(0, pg22)) == 3

    def test_foreign_subspace(self, pg22: Geometry, pg32: Geometry) -> None:
        with pytest.raises(GeometryMismatchError):
            pencil_through(pg22.lines[0], pg32)

    def test_line_through(self, pg32: Geometry) -> None:
        line = pg32.line_through(0, 1)
        assert line.mask >> 0 & 1
        assert line.mask >> 1 & 1
        with pytest.raises(PreconditionError):
            pg32.line_through(2, 2)


class TestPointSet:
    def test_set_algebra(self, pg32: Geometry) -> None:
        a = pg32.pointset([0, 1, 2])
        b = pg32.pointset([2, 3])
        assert (a | b).indices == (0, 1, 2, 3)
        assert (a & b).indices == (2,)
        assert (a - b).indices == (0, 1)
        assert len(a.complement()) == 12
        assert (a & b).issubset(a)
        assert 1 in a
        assert 3 not in a

    def test_mixed_geometries(self, pg22: Geometry, pg32: Geometry) -> None:
        with pytest.raises(GeometryMismatchError):
            pg22.pointset([0]) | pg32.pointset([0])

    def test_mask_range(self, pg22: Geometry) -> None:
        with pytest.raises(InputValidationError):
            pg22.pointset(1 << 7)

    def test_equality(self, pg32: Geometry) -> None:
        assert pg32.pointset([1, 2]) == pg32.pointset(0b110)
        assert len({pg32.pointset([1, 2]), pg32.pointset(0b110)}) == 1

    def test_serialization(self, pg22: Geometry) -> None:
        assert pg22.pointset([0, 6]).model_dump() == {
            "k": 3,
            "q": 2,
            "points": [[0, 0, 1], [1, 1, 1]],
        }

    def test_constructors(self, pg32: Geometry) -> None:
        assert len(plane_complement(pg32, 0)) == 8
        plane = pg32.hyperplanes[0].mask
        point = next(i for i in range(15) if plane >> i & 1)
        assert len(punctured_plane(pg32, 0, point)) == 6
        off = next(i for i in range(15) if not plane >> i & 1)
        with pytest.raises(PreconditionError):
            punctured_plane(pg32, 0, off)


class TestQuadrics:
    def test_hyperbolic_quadric(self, quadric) -> None:
        assert len(quadric) == 9
        for x in quadric.coords:
            assert (x[0] * x[1] + x[2] * x[3]) % 2 == 0

    def test_parabolic_quadric(self, pg42: Geometry) -> None:
        quadric = parabolic_quadric(pg42)
        assert len(quadric) == 15
        for x in quadric.coords:
            assert (x[0] ** 2 + x[1] * x[2] + x[3] * x[4]) % 2 == 0

    def test_wrong_geometry(self, pg22: Geometry, pg32: Geometry) -> None:
        with pytest.raises(GeometryMismatchError):
            hyperbolic_quadric(pg22)
        with pytest.raises(GeometryMismatchError):
            parabolic_quadric(pg32)

    def test_rulings(self, pg32: Geometry, quadric) -> None:
        regulus, opposite = quadric_rulings(pg32)
        assert len(regulus) == len(opposite) == 3
        union = 0
        for first, second in combinations(regulus, 2):
            assert not pg32.lines[first].mask & pg32.lines[second].mask
        for j in regulus:
            union |= pg32.lines[j].mask
            for i in opposite:
                assert (pg32.lines[j].mask & pg32.lines[i].mask).bit_count() == 1
        assert union == quadric.mask
        assert set(pg32.contained_lines(quadric.mask)) == {*regulus, *opposite}
