"""Test suite for TriangulationService."""

import random
from fractions import Fraction

import pytest

from cubist.domain.cover.service.triangulation_service import TriangulationService, face_id
from cubist.domain.cube_space.models import CubePoint

F = Fraction

SQUARE_SAMPLES = [
	(F(1, 8), F(3, 8)),
	(F(1, 4), F(1, 4)),
	(F(3, 16), F(1, 2)),
	(F(1, 2), F(1, 2)),
	(F(0), F(0)),
	(F(5, 6), F(1, 3)),
	(F(7, 8), F(15, 16)),
]


class TestLocateCoordinates:
	"""Test suite for locating points of the unit cube."""

	@pytest.mark.asyncio
	async def test_interval_point(self, test_container):
		"""Test that 3/16 in [0, 1] has T₁ barycentric coordinates (1/4, 3/4)."""
		triangulation = await test_container.make(TriangulationService)

		cell = triangulation.locate_coordinates([F(3, 16)])

		assert cell.signs == (-1,)
		assert cell.bary == (F(1, 4), F(3, 4))
		assert cell.star_levels == [1]

	@pytest.mark.asyncio
	@pytest.mark.parametrize(
		"value,levels",
		[(F(1, 8), [0, 1]), (F(1, 4), [1]), (F(0), [0]), (F(1, 2), [0]), (F(7, 8), [0, 1])],
	)
	async def test_interval_star_levels(self, test_container, value, levels):
		"""Test the star levels along an edge, including the ties at 1/8 and 7/8."""
		triangulation = await test_container.make(TriangulationService)

		assert triangulation.star_levels_of_coordinates([value]) == levels

	@pytest.mark.asyncio
	async def test_empty_cube_is_a_vertex(self, test_container):
		"""Test that a vertex lies in the level 0 star only."""
		triangulation = await test_container.make(TriangulationService)

		assert triangulation.star_levels_of_coordinates([]) == [0]

	@pytest.mark.asyncio
	async def test_barycentric_coordinates_sum_to_one(self, test_container):
		"""Test that every located point has barycentric coordinates summing to 1."""
		triangulation = await test_container.make(TriangulationService)

		for values in SQUARE_SAMPLES:
			cell = triangulation.locate_coordinates(values)
			assert sum(cell.bary) == 1
			assert all(q >= 0 for q in cell.bary)


class TestEnumeration:
	"""Test suite comparing the closed form with explicit T₂ enumeration."""

	@pytest.mark.asyncio
	@pytest.mark.parametrize("value", [F(0), F(1, 8), F(3, 16), F(1, 4), F(1, 2), F(2, 3), F(7, 8), F(1)])
	async def test_interval_agrees(self, test_container, value):
		"""Test that both methods give the same star levels on an edge."""
		triangulation = await test_container.make(TriangulationService)

		assert triangulation.star_levels_by_enumeration([value]) == triangulation.star_levels_of_coordinates([value])

	@pytest.mark.asyncio
	@pytest.mark.parametrize("values", SQUARE_SAMPLES)
	async def test_square_agrees(self, test_container, values):
		"""Test that both methods give the same star levels on a square."""
		triangulation = await test_container.make(TriangulationService)

		assert triangulation.star_levels_by_enumeration(values) == triangulation.star_levels_of_coordinates(values)

	@pytest.mark.asyncio
	@pytest.mark.parametrize("dimension", [1, 2])
	async def test_random_points_agree(self, test_container, dimension):
		"""Test that both methods agree on 200 seeded points, ties included."""
		triangulation = await test_container.make(TriangulationService)
		rng = random.Random(dimension)

		for _ in range(200):
			values = [F(rng.randrange(0, 49), 48) for _ in range(dimension)]
			assert triangulation.star_levels_by_enumeration(values) == triangulation.star_levels_of_coordinates(values)


class TestLocateInComplex:
	"""Test suite for locating cube points of a complex."""

	def test_face_id(self):
		"""Test the face naming scheme."""
		assert face_id(4, [1, 3]) == "4/1.3"
		assert face_id(7, []) == "7"

	@pytest.mark.asyncio
	async def test_square_point(self, test_container, hyperplanes_of):
		"""Test the T and T₁ vertices around a point of the 2×2 grid square."""
		triangulation = await test_container.make(TriangulationService)
		hs = hyperplanes_of("grid", 2, 2)
		column, row = hs.hyperplane_of_edge(0, 1), hs.hyperplane_of_edge(0, 2)
		assert (column, row) == (0, 1)

		location = triangulation.locate(hs, CubePoint(vertex=0, frac={column: F(3, 4), row: F(1, 4)}))

		assert location.orthant == (1, -1)
		assert location.t_vertices == ("0/0.1", "1/1", "1")
		assert location.bary == (0, 1, 0)
		assert location.star_vertices() == [(1, "0/0.1+1")]

	@pytest.mark.asyncio
	async def test_graph_vertex(self, test_container, hyperplanes_of):
		"""Test that a vertex of the complex is its own level 0 star."""
		triangulation = await test_container.make(TriangulationService)
		hs = hyperplanes_of("grid", 2, 2)

		assert triangulation.star_vertices(hs, CubePoint(vertex=3)) == [(0, "3")]
