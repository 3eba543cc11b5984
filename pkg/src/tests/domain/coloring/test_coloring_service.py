"""Test suite for ColoringService."""

from itertools import combinations

import pytest

from cubist.domain.coloring.service.coloring_service import ColoringService

# A square 0-1-2-3 with a pendant edge 2-4: the pendant hyperplane has both
# crossing square hyperplanes below it.
SQUARE_WITH_TAIL = [(0, 1), (1, 2), (2, 3), (0, 3), (2, 4)]


def naive_levels(hs, subset, d):
	"""Descending partition straight from its definition, testing every d-subset below h."""
	levels = {h: 0 for h in subset}
	current, n = set(subset), 0
	while current:
		survivors = {
			h
			for h in current
			if any(
				all(hs.relations.crosses(a, b) for a, b in combinations(group, 2))
				for group in combinations([k for k in current if hs.relations.less(k, h)], d)
			)
		}
		if not survivors:
			break
		n += 1
		levels.update({h: n for h in survivors})
		current = survivors
	return levels


class TestDescendPartition:
	"""Test suite for descending partitions."""

	@pytest.mark.asyncio
	async def test_tree_stays_at_level_zero(self, test_container, hyperplanes_of):
		"""Test that a tree has no crossing pairs, so every level is 0."""
		coloring_service = await test_container.make(ColoringService)
		hs = hyperplanes_of("tree", 3, 2)

		assert set(coloring_service.descend_partition(hs, hs.ids, 2).values()) == {0}

	@pytest.mark.asyncio
	async def test_grid_stays_at_level_zero(self, test_container, hyperplanes_of):
		"""Test that hyperplanes below a grid hyperplane never cross, so every level is 0."""
		coloring_service = await test_container.make(ColoringService)
		hs = hyperplanes_of("grid", 4, 4)

		assert set(coloring_service.descend_partition(hs, hs.ids, 2).values()) == {0}

	@pytest.mark.asyncio
	async def test_three_cube_stays_at_level_zero(self, test_container, hyperplanes_of):
		"""Test that no hyperplane of the 3-cube has anything below it."""
		coloring_service = await test_container.make(ColoringService)
		hs = hyperplanes_of("hypercube", 3)

		assert set(coloring_service.descend_partition(hs, hs.ids, 2).values()) == {0}

	@pytest.mark.asyncio
	async def test_square_below_a_hyperplane_raises_its_level(self, test_container, median_of, hyperplanes_of):
		"""Test that two crossing hyperplanes below h lift h to level 1."""
		coloring_service = await test_container.make(ColoringService)
		hs = hyperplanes_of(median_of(5, SQUARE_WITH_TAIL))

		assert coloring_service.descend_partition(hs, hs.ids, 2) == {0: 0, 1: 0, 2: 1}
		assert coloring_service.descend_partition(hs, hs.ids, 3) == {0: 0, 1: 0, 2: 0}

	@pytest.mark.asyncio
	async def test_partition_needs_d_at_least_two(self, test_container, hyperplanes_of):
		"""Test that d < 2 is rejected."""
		coloring_service = await test_container.make(ColoringService)
		hs = hyperplanes_of("path", 3)

		with pytest.raises(ValueError):
			coloring_service.descend_partition(hs, hs.ids, 1)

	@pytest.mark.asyncio
	async def test_iterated_partition_appends_one_entry_per_step(self, test_container, median_of, hyperplanes_of):
		"""Test that each d of the sequence adds one rank entry."""
		coloring_service = await test_container.make(ColoringService)
		hs = hyperplanes_of(median_of(5, SQUARE_WITH_TAIL))

		assert coloring_service.iterated_partition(hs, hs.ids, (3, 2)) == {0: (0, 0), 1: (0, 0), 2: (0, 1)}

	@pytest.mark.asyncio
	@pytest.mark.parametrize(
		("kind", "n", "m", "seed"),
		[("staircase", 4, None, 0), ("strip_gluing", 4, 3, 0), ("hypercube_grid", 3, 3, 0), ("hypercube", 3, None, 0)]
		+ [("random_pocset", 5, 1, seed) for seed in range(8)],
	)
	@pytest.mark.parametrize("d", [2, 3])
	async def test_partition_matches_its_definition(self, test_container, hyperplanes_of, kind, n, m, seed, d):
		"""Test that descend_partition agrees with the subset-by-subset fixpoint."""
		coloring_service = await test_container.make(ColoringService)
		hs = hyperplanes_of(kind, n, m, seed=seed)

		assert coloring_service.descend_partition(hs, hs.ids, d) == naive_levels(hs, hs.ids, d)

	@pytest.mark.asyncio
	async def test_partition_of_a_subset_matches_its_definition(self, test_container, hyperplanes_of):
		"""Test that restricting K to a subset is handled like the definition."""
		coloring_service = await test_container.make(ColoringService)
		hs = hyperplanes_of("staircase", 4)
		subset = [h for h in hs.ids if h % 2 == 0]

		assert coloring_service.descend_partition(hs, subset, 2) == naive_levels(hs, subset, 2)


class TestRankVector:
	"""Test suite for rank vectors."""

	@pytest.mark.asyncio
	async def test_path_ranks_are_zero(self, test_container, hyperplanes_of):
		"""Test that one-dimensional components get rank (0,)."""
		coloring_service = await test_container.make(ColoringService)

		assert set(coloring_service.rank_vector(hyperplanes_of("path", 6)).values()) == {(0,)}

	@pytest.mark.asyncio
	async def test_grid_ranks_are_zero(self, test_container, hyperplanes_of):
		"""Test that the 4×4 grid has rank (0,) everywhere."""
		coloring_service = await test_container.make(ColoringService)

		assert set(coloring_service.rank_vector(hyperplanes_of("grid", 4, 4)).values()) == {(0,)}

	@pytest.mark.asyncio
	async def test_ranks_are_per_component(self, test_container, median_of, hyperplanes_of):
		"""Test that a tree beside a square with a tail is ranked componentwise."""
		coloring_service = await test_container.make(ColoringService)
		edges = [(0, 1), (1, 2)] + [(u + 3, v + 3) for u, v in SQUARE_WITH_TAIL]
		hs = hyperplanes_of(median_of(8, edges))

		assert coloring_service.rank_vector(hs) == {0: (0,), 1: (0,), 2: (0,), 3: (0,), 4: (1,)}


class TestColoring:
	"""Test suite for predecessors and the 2-coloring."""

	@pytest.mark.asyncio
	async def test_path_alternates(self, test_container, hyperplanes_of):
		"""Test that P5 is coloured 1, 0, 1, 0 and K_c holds the colour 0 hyperplanes."""
		coloring_service = await test_container.make(ColoringService)

		coloring = coloring_service.compute_coloring(hyperplanes_of("path", 5))

		assert coloring.color == (1, 0, 1, 0)
		assert coloring.k_c == [1, 3]
		assert coloring.predecessors == ((), (0,), (1,), (2,))

	@pytest.mark.asyncio
	async def test_hyperplanes_at_the_base_get_colour_one(self, test_container, hyperplanes_of):
		"""Test that every hyperplane whose carrier holds the base is coloured 1."""
		coloring_service = await test_container.make(ColoringService)
		hs = hyperplanes_of("staircase", 4)

		coloring = coloring_service.compute_coloring(hs)

		for h in hs.ids:
			if hs.base_distance(h) == 0:
				assert coloring.color[h] == 1
				assert coloring.predecessors[h] == ()

	@pytest.mark.asyncio
	async def test_colour_rule(self, test_container, hyperplanes_of):
		"""Test c(h) = 1 exactly when all r-maximal predecessors have colour 0."""
		coloring_service = await test_container.make(ColoringService)
		hs = hyperplanes_of("strip_gluing", 4, 3)

		coloring = coloring_service.compute_coloring(hs)

		for h in hs.ids:
			expected = 1 if all(coloring.color[k] == 0 for k in coloring.r_maximal[h]) else 0
			assert coloring.color[h] == expected
			assert set(coloring.r_maximal[h]) <= set(coloring.predecessors[h])

	@pytest.mark.asyncio
	async def test_square_with_tail(self, test_container, median_of, hyperplanes_of):
		"""Test the colouring when the pendant hyperplane has two predecessors."""
		coloring_service = await test_container.make(ColoringService)
		hs = hyperplanes_of(median_of(5, SQUARE_WITH_TAIL))

		coloring = coloring_service.compute_coloring(hs)

		assert coloring.predecessors[2] == (0, 1)
		assert coloring.color == (1, 1, 0)
		assert coloring.rows()[2] == {"hyperplane": 2, "rank": [1], "color": 0, "predecessors": [0, 1], "r_maximal": [0, 1]}

	@pytest.mark.asyncio
	@pytest.mark.parametrize(("kind", "n", "m"), [("path", 7, None), ("tree", 3, 2), ("tree", 4, 2), ("tree", 2, 3)])
	async def test_one_dimensional_colours_alternate(self, test_container, hyperplanes_of, kind, n, m):
		"""Test that with D ≤ 1 ranks are zero and colours alternate with depth below the base."""
		coloring_service = await test_container.make(ColoringService)
		hs = hyperplanes_of(kind, n, m)

		coloring = coloring_service.compute_coloring(hs)

		for h in hs.ids:
			depth = hs.relations.below_mask(h).bit_count()
			assert coloring.rank[h] == (0,)
			assert coloring.color[h] == 1 - depth % 2
			assert len(coloring.predecessors[h]) == min(depth, 1)

	@pytest.mark.asyncio
	async def test_one_dimensional_components_alternate(self, test_container, median_of, hyperplanes_of):
		"""Test that a path beside a tripod is coloured by depth in each component."""
		coloring_service = await test_container.make(ColoringService)
		edges = [(0, 1), (1, 2), (2, 3), (4, 5), (5, 6), (5, 7)]
		hs = hyperplanes_of(median_of(8, edges))

		coloring = coloring_service.compute_coloring(hs)

		assert coloring.dimension == (1, 1)
		for h in hs.ids:
			assert coloring.rank[h] == (0,)
			assert coloring.color[h] == 1 - hs.relations.below_mask(h).bit_count() % 2
