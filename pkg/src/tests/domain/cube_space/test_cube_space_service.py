"""Test suite for CubeSpaceService."""

from fractions import Fraction

import networkx as nx
import pytest
from pydantic import ValidationError

from cubist.domain.cube_space.exceptions import ComponentMismatchError, NotInImageError
from cubist.domain.cube_space.models import CubePoint, FinSupportPoint
from cubist.domain.cube_space.service.cube_space_service import CubeSpaceService
from cubist.domain.duality.service.roller_service import RollerService
from cubist.domain.hyperplanes.service.hyperplane_service import HyperplaneService
from cubist.domain.median.exceptions import UnknownVertexError
from cubist.domain.median.models import INFINITY

GENERATED = [("grid", 6, 6, 0), ("tree", 4, 2, 0), ("strip_gluing", 4, 2, 0)] + [
	("random_pocset", 5, 2, seed) for seed in range(25)
]


def point(entries, component=0) -> FinSupportPoint:
	return FinSupportPoint(component=component, entries=entries)


class TestFinSupportPoint:
	"""Test suite for the finitely supported point model."""

	def test_zero_coordinates_drop_out(self):
		"""Test that zero coordinates are not stored."""
		assert point({0: 0, 1: Fraction(1, 2)}).support == [1]

	def test_coordinates_parse_from_strings(self):
		"""Test that "p/q" strings are read as exact fractions."""
		assert point({"2": "1/3"}).entries == {2: Fraction(1, 3)}

	def test_coordinates_outside_unit_interval_are_rejected(self):
		"""Test that a coordinate above 1 fails validation."""
		with pytest.raises(ValidationError):
			point({0: Fraction(3, 2)})

	def test_cube_point_coordinates_are_strictly_fractional(self):
		"""Test that a cube point cannot hold a coordinate equal to 1."""
		with pytest.raises(ValidationError):
			CubePoint(vertex=0, frac={0: 1})


class TestEmbedding:
	"""Test suite for ι and its extension to cube points."""

	@pytest.mark.asyncio
	async def test_iota_on_path(self, test_container, hyperplanes_of):
		"""Test that ι(2) on P5 is the indicator of the first two hyperplanes."""
		cube_space = await test_container.make(CubeSpaceService)
		hs = hyperplanes_of("path", 5)

		assert cube_space.iota(hs, 0) == point({})
		assert cube_space.iota(hs, 2) == point({0: 1, 1: 1})

	@pytest.mark.asyncio
	async def test_iota_distance_is_graph_distance(self, test_container, hyperplanes_of):
		"""Test that ι is an isometry on the 3×3 grid."""
		cube_space = await test_container.make(CubeSpaceService)
		hs = hyperplanes_of("grid", 3, 3)
		graph = hs.graph

		for u in range(graph.vertex_count):
			for v in range(graph.vertex_count):
				assert cube_space.l1_distance(cube_space.iota(hs, u), cube_space.iota(hs, v)) == graph.distance(u, v)

	@pytest.mark.asyncio
	async def test_iota_rejects_unknown_vertex(self, test_container, hyperplanes_of):
		"""Test that a vertex outside the graph raises UnknownVertexError."""
		cube_space = await test_container.make(CubeSpaceService)

		with pytest.raises(UnknownVertexError):
			cube_space.iota(hyperplanes_of("path", 3), 7)

	@pytest.mark.asyncio
	async def test_encode_then_decode_a_square_point(self, test_container, hyperplanes_of):
		"""Test that a point inside a square of the 2×3 grid survives encode and decode."""
		cube_space = await test_container.make(CubeSpaceService)
		hs = hyperplanes_of("grid", 2, 3)
		row = hs.hyperplane_of_edge(1, 4)
		right = hs.hyperplane_of_edge(1, 2)
		cube = CubePoint(vertex=1, frac={row: Fraction(1, 2), right: Fraction(1, 3)})

		encoded = cube_space.encode(hs, cube)

		assert encoded.value(hs.hyperplane_of_edge(0, 1)) == 1
		assert cube_space.decode(hs, encoded) == cube

	@pytest.mark.asyncio
	async def test_encode_rejects_separating_fraction(self, test_container, hyperplanes_of):
		"""Test that a fractional coordinate on a hyperplane the corner already crossed is refused."""
		cube_space = await test_container.make(CubeSpaceService)
		hs = hyperplanes_of("path", 5)

		with pytest.raises(NotInImageError) as e:
			cube_space.encode(hs, CubePoint(vertex=2, frac={0: Fraction(1, 2)}))

		assert e.value.reason == NotInImageError.NO_CUBE_AT_VERTEX


class TestDecode:
	"""Test suite for decoding points of C(X)."""

	@pytest.mark.asyncio
	async def test_decode_edge_point_on_path(self, test_container, hyperplanes_of):
		"""Test that {e1: 1, e2: 1/2} on P5 is halfway along the edge 1 - 2."""
		cube_space = await test_container.make(CubeSpaceService)

		cube = cube_space.decode(hyperplanes_of("path", 5), point({0: 1, 1: Fraction(1, 2)}))

		assert cube == CubePoint(vertex=1, frac={1: Fraction(1, 2)})

	@pytest.mark.asyncio
	async def test_decode_rejects_opposite_fractions(self, test_container, tripod, hyperplanes_of):
		"""Test that two opposite leaves of the tripod cannot both be fractional."""
		cube_space = await test_container.make(CubeSpaceService)

		with pytest.raises(NotInImageError) as e:
			cube_space.decode(hyperplanes_of(tripod), point({1: Fraction(1, 2), 2: Fraction(1, 2)}))

		assert e.value.reason == NotInImageError.FRAC_NOT_CROSSING

	@pytest.mark.asyncio
	async def test_decode_rejects_ones_without_vertex(self, test_container, tripod, hyperplanes_of):
		"""Test that ones on both leaves match no vertex separating set."""
		cube_space = await test_container.make(CubeSpaceService)

		with pytest.raises(NotInImageError) as e:
			cube_space.decode(hyperplanes_of(tripod), point({1: 1, 2: 1}))

		assert e.value.reason == NotInImageError.NO_VERTEX_FOR_ONES

	@pytest.mark.asyncio
	async def test_decode_rejects_missing_cube(self, test_container, hyperplanes_of):
		"""Test that crossing fractions without a square at the corner are refused."""
		cube_space = await test_container.make(CubeSpaceService)
		hs = hyperplanes_of("grid", 2, 3)
		row = hs.hyperplane_of_edge(0, 3)
		far_column = hs.hyperplane_of_edge(1, 2)

		with pytest.raises(NotInImageError) as e:
			cube_space.decode(hs, point({row: Fraction(1, 2), far_column: Fraction(1, 2)}))

		assert e.value.reason == NotInImageError.NO_CUBE_AT_VERTEX


class TestDistance:
	"""Test suite for ℓ¹ distances and component checks."""

	@pytest.mark.asyncio
	async def test_l1_distance(self, test_container):
		"""Test the exact ℓ¹ distance of two finitely supported points."""
		cube_space = await test_container.make(CubeSpaceService)

		a = point({0: Fraction(1, 2)})
		b = point({0: Fraction(1, 3), 1: Fraction(1, 4)})

		assert cube_space.l1_distance(a, b) == Fraction(5, 12)

	@pytest.mark.asyncio
	async def test_l1_distance_across_components_is_infinite(self, test_container):
		"""Test that points of different components are infinitely far apart."""
		cube_space = await test_container.make(CubeSpaceService)

		assert cube_space.l1_distance(point({}, 0), point({}, 1)) == INFINITY

	@pytest.mark.asyncio
	async def test_support_outside_component_is_rejected(self, test_container, median_of, hyperplanes_of):
		"""Test that a hyperplane of another component raises ComponentMismatchError."""
		cube_space = await test_container.make(CubeSpaceService)
		hs = hyperplanes_of(median_of(4, [(0, 1), (2, 3)]))

		with pytest.raises(ComponentMismatchError):
			cube_space.decode(hs, point({1: Fraction(1, 2)}, component=0))


class TestGeneratedComplexes:
	"""Test suite for ι and duality across generated complexes."""

	@pytest.mark.asyncio
	@pytest.mark.parametrize(("kind", "n", "m", "seed"), GENERATED)
	async def test_iota_is_an_isometry(self, test_container, hyperplanes_of, kind, n, m, seed):
		"""Test that ℓ¹ distance of images, separating hyperplanes and graph distance agree."""
		cube_space = await test_container.make(CubeSpaceService)
		hyperplane_service = await test_container.make(HyperplaneService)
		hs = hyperplanes_of(kind, n, m, seed=seed)
		graph = hs.graph
		images = [cube_space.iota(hs, v) for v in range(graph.vertex_count)]

		for u in range(graph.vertex_count):
			for v in range(u + 1, graph.vertex_count):
				d = graph.distance(u, v)
				assert cube_space.l1_distance(images[u], images[v]) == d
				assert len(hyperplane_service.separating(hs, u, v)) == d

	@pytest.mark.asyncio
	@pytest.mark.parametrize(("kind", "n", "m", "seed"), GENERATED)
	async def test_dual_round_trip(self, test_container, hyperplanes_of, kind, n, m, seed):
		"""Test that the halfspace pocset has one ultrafilter per vertex and rebuilds the graph."""
		roller = await test_container.make(RollerService)
		hs = hyperplanes_of(kind, n, m, seed=seed)

		ultrafilters = roller.enumerate_ultrafilters(roller.pocset_from_hyperplanes(hs, 0))

		assert len(ultrafilters) == hs.graph.vertex_count
		assert nx.is_isomorphic(roller.dual_graph(ultrafilters).graph, hs.graph.graph)
