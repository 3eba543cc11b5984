from typing import Dict, Iterable, List, Optional, Sequence

import networkx as nx

from cubist.core.logging import log
from cubist.core.service.base_service import Service
from cubist.domain.coloring.models import ColoringAssignment, Rank
from cubist.domain.hyperplanes.models import HyperplaneSet
from cubist.domain.hyperplanes.service.hyperplane_service import HyperplaneService
from cubist.domain.median.models import mask_members, members_mask


class ColoringService(Service):
	"""Descending partitions, rank vectors, predecessors and the 2-coloring c.

	Usage: `coloring = coloring_service.compute_coloring(hs)`
	Usage: `levels = coloring_service.descend_partition(hs, hs.ids, 2)`
	"""

	async def boot(self, **kwargs) -> None:
		self._hyperplane_service = await self.make(HyperplaneService)

	async def handle(self, **kwargs) -> ColoringAssignment:
		return self.compute_coloring(kwargs["hyperplanes"])

	def descend_partition(self, hyperplanes: HyperplaneSet, subset: Iterable[int], d: int) -> Dict[int, int]:
		"""Level n(h) of each h in the subset K, with h ∈ K^d_n.

		K^d_{≥0} = K, and K^d_{≥n+1} keeps the h ∈ K^d_{≥n} having d pairwise
		crossing members of K^d_{≥n} strictly below it. Iterated until empty.
		Usage: `service.descend_partition(hs, hs.ids, 2)` -> {h: 0, ...} on a tree
		"""
		if d < 2:
			raise ValueError(f"descending partitions need d >= 2, got {d}")

		relations = hyperplanes.relations
		levels = {h: 0 for h in subset}
		current = members_mask(levels)
		n = 0
		while current:
			survivors = 0
			for h in mask_members(current):
				below = relations.below_mask(h) & current
				if below.bit_count() >= d and self._has_crossing_clique(hyperplanes, below, d):
					survivors |= 1 << h
			if not survivors:
				break
			n += 1
			for h in mask_members(survivors):
				levels[h] = n
			current = survivors
		return levels

	def _has_crossing_clique(self, hyperplanes: HyperplaneSet, mask: int, d: int) -> bool:
		crossing = hyperplanes.relations.crossing_graph(mask_members(mask))
		return any(len(clique) >= d for clique in nx.find_cliques(crossing))

	def iterated_partition(self, hyperplanes: HyperplaneSet, subset: Iterable[int], dims: Sequence[int]) -> Dict[int, Rank]:
		"""Rank tuples from the iterated partition K^(d_1, ..., d_k).

		Each level class of one step is partitioned again by the next d.
		Usage: `service.iterated_partition(hs, hs.ids, (3, 2))` -> {h: (n1, n2), ...}
		"""
		ranks: Dict[int, Rank] = {h: () for h in subset}
		for d in dims:
			classes: Dict[Rank, List[int]] = {}
			for h, rank in ranks.items():
				classes.setdefault(rank, []).append(h)
			for rank, members in classes.items():
				for h, level in self.descend_partition(hyperplanes, members, d).items():
					ranks[h] = rank + (level,)
		return ranks

	def rank_vector(self, hyperplanes: HyperplaneSet, dimension: Optional[int] = None) -> Dict[int, Rank]:
		"""Rank vectors over (D, D-1, ..., 2) per component, or (0,) when D ≤ 1.

		D is the component's dimension unless `dimension` overrides it.
		Usage: `service.rank_vector(hs)` -> {0: (0,), 1: (0,), ...} on a path
		"""
		ranks: Dict[int, Rank] = {}
		for component, members in enumerate(hyperplanes.component_hyperplanes):
			d = dimension if dimension is not None else self._hyperplane_service.component_dimension(hyperplanes, component)
			if d <= 1:
				ranks.update({h: (0,) for h in members})
			else:
				ranks.update(self.iterated_partition(hyperplanes, members, range(d, 1, -1)))
		return ranks

	def predecessors(self, hyperplanes: HyperplaneSet, h: int) -> List[int]:
		"""The k < h with nothing strictly between k and h.

		Usage: `service.predecessors(hs, 2)` -> [1] on a path
		"""
		relations = hyperplanes.relations
		below = relations.below_mask(h)
		return [k for k in mask_members(below) if relations.above_mask(k) & below == 0]

	def r_maximal_predecessors(self, hyperplanes: HyperplaneSet, ranks: Dict[int, Rank], h: int) -> List[int]:
		"""Predecessors whose rank is lexicographically maximal among the predecessors of h."""
		predecessors = self.predecessors(hyperplanes, h)
		if not predecessors:
			return []
		best = max(ranks[k] for k in predecessors)
		return [k for k in predecessors if ranks[k] == best]

	def compute_coloring(self, hyperplanes: HyperplaneSet, dimension: Optional[int] = None) -> ColoringAssignment:
		"""c(h) = 1 iff every r-maximal predecessor of h has colour 0.

		Hyperplanes are visited by distance from the base to their carrier, so
		every predecessor is coloured before its successors.
		Usage: `service.compute_coloring(hs).color` -> (1, 0, 1, 0) on P5
		"""
		relations = hyperplanes.relations
		ranks = self.rank_vector(hyperplanes, dimension)
		order = sorted(
			hyperplanes.ids,
			key=lambda h: (hyperplanes.base_distance(h), relations.below_mask(h).bit_count(), h),
		)

		color: Dict[int, int] = {}
		predecessors: Dict[int, List[int]] = {}
		r_maximal: Dict[int, List[int]] = {}
		for h in order:
			predecessors[h] = self.predecessors(hyperplanes, h)
			r_maximal[h] = self.r_maximal_predecessors(hyperplanes, ranks, h)
			color[h] = 1 if all(color[k] == 0 for k in r_maximal[h]) else 0

		dimensions = tuple(
			self._hyperplane_service.component_dimension(hyperplanes, c) for c in range(len(hyperplanes.graph.components))
		)
		assignment = ColoringAssignment(
			rank=tuple(ranks[h] for h in hyperplanes.ids),
			color=tuple(color[h] for h in hyperplanes.ids),
			predecessors=tuple(tuple(predecessors[h]) for h in hyperplanes.ids),
			r_maximal=tuple(tuple(r_maximal[h]) for h in hyperplanes.ids),
			dimension=dimensions,
		)
		log.debug("coloured {} hyperplanes, |K_c| = {}", len(hyperplanes), len(assignment.k_c))
		return assignment
