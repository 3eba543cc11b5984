"""Test suite for HyperplaneService and the relation table."""

from itertools import combinations, permutations

import pytest

from cubist.core.config.config import CubistConfig
from cubist.domain.hyperplanes.models import Relation
from cubist.domain.coloring.service.coloring_service import ColoringService
from cubist.domain.hyperplanes.service.hyperplane_service import HyperplaneService
from cubist.domain.median.exceptions import DifferentComponentsError

GENERATED = [
	("path", 6, None, 0),
	("grid", 4, 5, 0),
	("tree", 3, 2, 0),
	("hypercube", 3, None, 0),
	("hypercube_grid", 3, 2, 0),
	("staircase", 4, None, 0),
	("strip_gluing", 4, 3, 0),
] + [("random_pocset", 5, 2, seed) for seed in range(5)]
CONVERSE = {
	Relation.LESS: Relation.GREATER,
	Relation.GREATER: Relation.LESS,
	Relation.CROSS: Relation.CROSS,
	Relation.OPPOSITE: Relation.OPPOSITE,
}


class TestComputeHyperplanes:
	"""Test suite for edge classes and halfspaces."""

	@pytest.mark.asyncio
	async def test_square_has_two_hyperplanes(self, test_container, median_of):
		"""Test that a square splits into two classes of parallel edges."""
		hyperplane_service = await test_container.make(HyperplaneService)

		hs = hyperplane_service.compute_hyperplanes(median_of(4, [(0, 1), (1, 2), (2, 3), (0, 3)]))

		assert hs.classes == (((0, 1), (2, 3)), ((0, 3), (1, 2)))
		assert hs.side_minus(0) == [0, 3]
		assert hs.side_plus(0) == [1, 2]

	@pytest.mark.asyncio
	async def test_three_cube(self, test_container, hyperplanes_of):
		"""Test that the 3-cube has 3 hyperplanes of 4 edges each."""
		hs = hyperplanes_of("hypercube", 3)

		assert len(hs) == 3
		assert all(len(edges) == 4 for edges in hs.classes)

	@pytest.mark.asyncio
	async def test_grid_three_by_three(self, test_container, hyperplanes_of):
		"""Test that the 3×3 grid has 4 hyperplanes of 3 edges each."""
		hs = hyperplanes_of("grid", 3, 3)

		assert len(hs) == 4
		assert all(len(edges) == 3 for edges in hs.classes)

	@pytest.mark.asyncio
	async def test_base_lies_on_every_minus_side(self, test_container, hyperplanes_of):
		"""Test that halfspaces are oriented with the base on the minus side."""
		hs = hyperplanes_of("staircase", 3)
		base = hs.graph.base[0]

		assert all(not hs.in_plus(h, base) for h in hs.ids)
		assert hs.signatures[base] == 0

	@pytest.mark.asyncio
	async def test_ids_ascend_with_base_distance(self, test_container, hyperplanes_of):
		"""Test that hyperplane ids follow the distance from the base to the carrier."""
		hs = hyperplanes_of("path", 5)

		assert [hs.base_distance(h) for h in hs.ids] == [0, 1, 2, 3]
		assert hs.carrier_distance(0, 3) == 2


class TestRelations:
	"""Test suite for the four-way relation table."""

	@pytest.mark.asyncio
	async def test_square_hyperplanes_cross(self, test_container, median_of):
		"""Test that the two hyperplanes of a square cross."""
		hyperplane_service = await test_container.make(HyperplaneService)
		hs = hyperplane_service.compute_hyperplanes(median_of(4, [(0, 1), (1, 2), (2, 3), (0, 3)]))

		assert hyperplane_service.relation(hs, 0, 1) is Relation.CROSS

	@pytest.mark.asyncio
	async def test_path_hyperplanes_are_nested(self, test_container, median_of):
		"""Test less(e1, e2) on the path 0-1-2 based at 0."""
		hyperplane_service = await test_container.make(HyperplaneService)
		hs = hyperplane_service.compute_hyperplanes(median_of(3, [(0, 1), (1, 2)]))

		assert hyperplane_service.relation(hs, 0, 1) is Relation.LESS
		assert hyperplane_service.relation(hs, 1, 0) is Relation.GREATER
		assert hyperplane_service.relation(hs, 1, 1) is Relation.EQUAL

	@pytest.mark.asyncio
	async def test_tripod_leaves_are_opposite(self, test_container, tripod):
		"""Test that the two far leaf hyperplanes of a tripod based at a leaf are opposite."""
		hyperplane_service = await test_container.make(HyperplaneService)
		hs = hyperplane_service.compute_hyperplanes(tripod)

		assert hyperplane_service.relation(hs, 1, 2) is Relation.OPPOSITE
		assert hs.relations.opposite_pairs() == [(1, 2)]
		assert sorted(hs.relations.less_pairs()) == [(0, 1), (0, 2)]

	@pytest.mark.asyncio
	async def test_different_components(self, test_container, median_of):
		"""Test that hyperplanes of different components are marked as such."""
		hyperplane_service = await test_container.make(HyperplaneService)
		hs = hyperplane_service.compute_hyperplanes(median_of(4, [(0, 1), (2, 3)]))

		assert hyperplane_service.relation(hs, 0, 1) is Relation.DIFFERENT_COMPONENT

	@pytest.mark.asyncio
	async def test_sparse_table_matches_dense(self, test_container, test_config, hyperplanes_of):
		"""Test that lazily filled relation tables agree with eagerly built ones."""
		dense = hyperplanes_of("strip_gluing", 4, 2)
		test_config.hyperplanes.dense_table_limit = 0
		sparse = hyperplanes_of("strip_gluing", 4, 2)

		assert dense.relations.is_dense
		assert not sparse.relations.is_dense
		for h, k in combinations(dense.ids, 2):
			assert sparse.relations.rel(h, k) is dense.relations.rel(h, k)

	@pytest.mark.asyncio
	async def test_crossing_hyperplanes_meet_at_a_square(self, test_container, hyperplanes_of):
		"""Test that every crossing pair has adjacent carriers, i.e. a common square."""
		hs = hyperplanes_of("staircase", 3)

		for h, k in combinations(hs.ids, 2):
			if hs.relations.crosses(h, k):
				assert hs.carrier_distance(h, k) == 0

	@pytest.mark.asyncio
	@pytest.mark.parametrize(("kind", "n", "m", "seed"), GENERATED)
	async def test_relations_are_a_partition(self, test_container, hyperplanes_of, kind, n, m, seed):
		"""Test that each pair of distinct hyperplanes satisfies exactly one halfspace relation."""
		hs = hyperplanes_of(kind, n, m, seed=seed)

		for h, k in permutations(hs.ids, 2):
			minus_h, minus_k = set(hs.side_minus(h)), set(hs.side_minus(k))
			plus_h, plus_k = set(hs.side_plus(h)), set(hs.side_plus(k))
			holds = {
				Relation.LESS: minus_h < minus_k,
				Relation.GREATER: minus_k < minus_h,
				Relation.OPPOSITE: not plus_h & plus_k,
				Relation.CROSS: all((minus_h & minus_k, minus_h & plus_k, plus_h & minus_k, plus_h & plus_k)),
			}
			assert [relation for relation, ok in holds.items() if ok] == [hs.relations.rel(h, k)]
			assert hs.relations.rel(k, h) is CONVERSE[hs.relations.rel(h, k)]

	@pytest.mark.asyncio
	@pytest.mark.parametrize(("kind", "n", "m", "seed"), GENERATED)
	async def test_less_is_transitive(self, test_container, hyperplanes_of, kind, n, m, seed):
		"""Test that a < b < c implies a < c."""
		hs = hyperplanes_of(kind, n, m, seed=seed)

		for a, b, c in permutations(hs.ids, 3):
			if hs.relations.less(a, b) and hs.relations.less(b, c):
				assert hs.relations.less(a, c)

	@pytest.mark.asyncio
	@pytest.mark.parametrize(("kind", "n", "m", "seed"), GENERATED)
	async def test_predecessors_are_at_most_d(self, test_container, hyperplanes_of, kind, n, m, seed):
		"""Test that immediate predecessors pairwise cross, so there are at most D of them."""
		hyperplane_service = await test_container.make(HyperplaneService)
		coloring_service = await test_container.make(ColoringService)
		hs = hyperplanes_of(kind, n, m, seed=seed)
		dimension = hyperplane_service.dimension(hs)

		coloring = coloring_service.compute_coloring(hs)

		for h in hs.ids:
			assert len(coloring.predecessors[h]) <= dimension
			for a, b in combinations(coloring.predecessors[h], 2):
				assert hs.relations.crosses(a, b)


class TestSeparatingAndDimension:
	"""Test suite for separating sets and dimension."""

	@pytest.mark.asyncio
	async def test_separating_matches_distance(self, test_container, hyperplanes_of):
		"""Test |separating(x, y)| = d(x, y) on the 3×3 grid."""
		hyperplane_service = await test_container.make(HyperplaneService)
		hs = hyperplanes_of("grid", 3, 3)

		assert len(hyperplane_service.separating(hs, 0, 7)) == 3
		assert hyperplane_service.separating(hs, 4, 4) == []
		for x, y in combinations(range(9), 2):
			assert len(hyperplane_service.separating(hs, x, y)) == hs.graph.distance(x, y)

	@pytest.mark.asyncio
	async def test_path_ends_are_separated_by_everything(self, test_container, hyperplanes_of):
		"""Test that all four hyperplanes of P5 separate its ends."""
		hyperplane_service = await test_container.make(HyperplaneService)
		hs = hyperplanes_of("path", 5)

		assert hyperplane_service.separating(hs, 0, 4) == [0, 1, 2, 3]

	@pytest.mark.asyncio
	async def test_separating_needs_one_component(self, test_container, median_of):
		"""Test that separating sets across components are rejected."""
		hyperplane_service = await test_container.make(HyperplaneService)
		hs = hyperplane_service.compute_hyperplanes(median_of(4, [(0, 1), (2, 3)]))

		with pytest.raises(DifferentComponentsError):
			hyperplane_service.separating(hs, 0, 2)

	@pytest.mark.asyncio
	@pytest.mark.parametrize(
		("kind", "n", "m", "expected"),
		[
			("path", 5, None, 1),
			("grid", 3, 4, 2),
			("hypercube", 3, None, 3),
			("hypercube", 0, None, 0),
			("tree", 3, 2, 1),
			("staircase", 3, None, 2),
		],
	)
	async def test_dimension(self, test_container, hyperplanes_of, kind, n, m, expected):
		"""Test the dimension of the standard instances."""
		hyperplane_service = await test_container.make(HyperplaneService)

		assert hyperplane_service.dimension(hyperplanes_of(kind, n, m)) == expected

	@pytest.mark.asyncio
	async def test_dense_table_limit_comes_from_config(self, test_container, hyperplanes_of):
		"""Test that the relation table threshold follows the configuration."""
		config = await test_container.make(CubistConfig)

		assert hyperplanes_of("path", 3).dense_table_limit == config.hyperplanes.dense_table_limit

	@pytest.mark.asyncio
	async def test_to_json(self, test_container, hyperplanes_of):
		"""Test the hyperplane dump of a path."""
		hyperplane_service = await test_container.make(HyperplaneService)

		payload = hyperplane_service.to_json(hyperplanes_of("path", 3))

		assert payload["less"] == [[0, 1]]
		assert payload["opposite"] == []
		assert payload["cross"] == []
		assert payload["dimension"] == 1
		assert payload["hyperplanes"][1]["minus"] == [0, 1]
