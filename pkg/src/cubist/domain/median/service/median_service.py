from itertools import combinations
from typing import Iterable, List, Set

from cubist.core.logging import log
from cubist.core.service.base_service import Service
from cubist.domain.median.exceptions import (
	DifferentComponentsError,
	EmptySetError,
	InvalidGraphError,
	NotMedianError,
	UnknownVertexError,
)
from cubist.domain.median.models import ExtendedDistance, MedianGraph, RawGraph, mask_members, members_mask


class MedianService(Service):
	"""Validates median graphs and answers metric queries on them.

	All interval computations run on vertex bitmasks: I(x, y) is stored as an
	int whose bit v is set iff d(x, v) + d(v, y) = d(x, y).
	Usage: `graph = median_service.validate_median(RawGraph(vertices=3, edges=[(0, 1), (1, 2)]))`
	"""

	async def handle(self, **kwargs) -> MedianGraph:
		return self.validate_median(kwargs["raw"])

	def validate_median(self, raw: RawGraph) -> MedianGraph:
		"""Check simplicity and the median axiom on every component.

		Raises InvalidGraphError for loops, out of range endpoints or bad bases,
		and NotMedianError with the first offending triple otherwise.
		Usage: `graph = service.validate_median(raw)`
		"""
		n = raw.vertices
		for u, v in raw.edges:
			if not (0 <= u < n and 0 <= v < n):
				raise InvalidGraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
			if u == v:
				raise InvalidGraphError(f"edge ({u}, {v}) is a loop")

		draft = MedianGraph.from_edges(n, raw.edges)
		for index, vertex in (raw.base or {}).items():
			if not 0 <= index < len(draft.components):
				raise InvalidGraphError(f"base given for component {index}, graph has {len(draft.components)}")
			if not 0 <= vertex < n or draft.component_index[vertex] != index:
				raise InvalidGraphError(f"base vertex {vertex} is not in component {index}")

		graph = MedianGraph.from_edges(n, raw.edges, raw.base)
		for component in graph.components:
			self._check_triples(graph, component)

		log.debug(
			"validated median graph: {} vertices, {} edges, {} components",
			graph.vertex_count,
			len(graph.edges),
			len(graph.components),
		)
		return graph

	def _check_triples(self, graph: MedianGraph, component: Iterable[int]) -> None:
		intervals = graph.interval_masks
		for a, b, c in combinations(sorted(component), 3):
			common = intervals[a][b] & intervals[b][c] & intervals[a][c]
			if common == 0 or common & (common - 1):
				raise NotMedianError((a, b, c), common.bit_count())

	def require_vertices(self, graph: MedianGraph, *vertices: int) -> None:
		for v in vertices:
			if not 0 <= v < graph.vertex_count:
				raise UnknownVertexError(f"vertex {v} is not in 0..{graph.vertex_count - 1}")

	def distance(self, graph: MedianGraph, x: int, y: int) -> ExtendedDistance:
		"""Graph distance, infinite across components.

		Usage: `service.distance(graph, 0, 8)` -> 4 on the 3×3 grid
		"""
		self.require_vertices(graph, x, y)
		return graph.distance(x, y)

	def interval(self, graph: MedianGraph, x: int, y: int) -> List[int]:
		"""Vertices on some geodesic from x to y.

		Usage: `service.interval(graph, 0, 2)` -> [0, 1, 2] on a path
		"""
		self.require_vertices(graph, x, y)
		if not graph.same_component(x, y):
			raise DifferentComponentsError((x, y))
		return mask_members(graph.interval_mask(x, y))

	def median(self, graph: MedianGraph, x: int, y: int, z: int) -> int:
		"""The unique vertex between each pair of x, y, z.

		Usage: `service.median(graph, a, b, d)` -> the tripod centre
		"""
		self.require_vertices(graph, x, y, z)
		if not graph.same_component(x, y, z):
			raise DifferentComponentsError((x, y, z))
		common = graph.interval_mask(x, y) & graph.interval_mask(y, z) & graph.interval_mask(x, z)
		return common.bit_length() - 1

	def is_convex(self, graph: MedianGraph, vertices: Iterable[int]) -> bool:
		"""True iff I(x, y) ⊆ B for all x, y in B.

		Usage: `service.is_convex(graph, {0, 1})`
		"""
		members = sorted(set(vertices))
		if not members:
			raise EmptySetError("convexity needs a non-empty vertex set")
		self.require_vertices(graph, *members)
		if not graph.same_component(*members):
			raise DifferentComponentsError(tuple(members))

		mask = members_mask(members)
		outside = ~mask
		for x, y in combinations(members, 2):
			if graph.interval_mask(x, y) & outside:
				return False
		return True

	def components(self, graph: MedianGraph) -> List[Set[int]]:
		"""Vertex sets of the components, ordered by minimal vertex id."""
		return [set(component) for component in graph.components]

	def component_of(self, graph: MedianGraph, v: int) -> int:
		self.require_vertices(graph, v)
		return graph.component_of(v)
