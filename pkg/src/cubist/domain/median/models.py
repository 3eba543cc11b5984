import math
from functools import cached_property
from typing import Dict, FrozenSet, List, Optional, Tuple, Union

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field

Edge = Tuple[int, int]
ExtendedDistance = Union[int, float]

INFINITY: float = math.inf


class RawGraph(BaseModel):
	"""Unvalidated graph as read from a graph file.

	File format: `{"vertices": N, "edges": [[u, v], ...], "base": {"0": v, ...}}`,
	`base` optional and keyed by component index.
	"""

	vertices: int = Field(ge=0, description="Number of vertices; ids are 0..vertices-1")
	edges: List[Tuple[int, int]] = Field(default_factory=list)
	base: Optional[Dict[int, int]] = Field(default=None, description="Component index to base vertex")


class MedianGraph(BaseModel):
	"""A finite simple graph, possibly disconnected, with a base vertex per component.

	Components are indexed by ascending minimal vertex id. Instances are only
	handed out by `MedianService.validate_median`, after the median axiom has been
	checked on every component; derived tables are computed lazily and cached.
	"""

	model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

	vertex_count: int
	edges: Tuple[Edge, ...]
	base: Tuple[int, ...]

	@classmethod
	def from_edges(cls, vertex_count: int, edges, base: Optional[Dict[int, int]] = None) -> "MedianGraph":
		"""Normalise edges to sorted `(u, v)` pairs with `u < v` and pick component bases.

		Performs no validation beyond what indexing needs; see MedianService.validate_median.
		Usage: `MedianGraph.from_edges(3, [(0, 1), (1, 2)])`
		"""
		normalised = tuple(sorted({(min(u, v), max(u, v)) for u, v in edges}))
		draft = cls(vertex_count=vertex_count, edges=normalised, base=())
		bases = [min(component) for component in draft.components]
		for index, vertex in (base or {}).items():
			bases[index] = vertex
		return cls(vertex_count=vertex_count, edges=normalised, base=tuple(bases))

	def to_raw(self) -> RawGraph:
		return RawGraph(
			vertices=self.vertex_count,
			edges=list(self.edges),
			base={index: vertex for index, vertex in enumerate(self.base)},
		)

	@cached_property
	def graph(self) -> nx.Graph:
		g = nx.Graph()
		g.add_nodes_from(range(self.vertex_count))
		g.add_edges_from(self.edges)
		return g

	@cached_property
	def components(self) -> List[FrozenSet[int]]:
		return sorted((frozenset(c) for c in nx.connected_components(self.graph)), key=min)

	@cached_property
	def component_index(self) -> List[int]:
		index = [0] * self.vertex_count
		for c, members in enumerate(self.components):
			for v in members:
				index[v] = c
		return index

	@cached_property
	def component_masks(self) -> List[int]:
		return [sum(1 << v for v in members) for members in self.components]

	@cached_property
	def distances(self) -> List[List[Optional[int]]]:
		"""All-pairs BFS distances; None across components."""
		table: List[List[Optional[int]]] = [[None] * self.vertex_count for _ in range(self.vertex_count)]
		for source, lengths in nx.all_pairs_shortest_path_length(self.graph):
			row = table[source]
			for target, length in lengths.items():
				row[target] = length
		return table

	@cached_property
	def interval_masks(self) -> List[Dict[int, int]]:
		"""`interval_masks[x][y]` is the bitmask of I(x, y) for same-component y.

		Built per source by dynamic programming over the BFS layers: I(x, y) is y
		together with I(x, u) for every neighbour u of y one step closer to x.
		"""
		masks: List[Dict[int, int]] = []
		for x in range(self.vertex_count):
			row = self.distances[x]
			order = sorted(self.components[self.component_index[x]], key=lambda v: row[v])
			intervals: Dict[int, int] = {}
			for y in order:
				mask = 1 << y
				for u in self.graph.adj[y]:
					if row[u] == row[y] - 1:  # pyright: ignore[reportOptionalOperand]
						mask |= intervals[u]
				intervals[y] = mask
			masks.append(intervals)
		return masks

	def same_component(self, *vertices: int) -> bool:
		return len({self.component_index[v] for v in vertices}) <= 1

	def distance(self, x: int, y: int) -> ExtendedDistance:
		d = self.distances[x][y]
		return INFINITY if d is None else d

	def interval_mask(self, x: int, y: int) -> int:
		return self.interval_masks[x][y]

	def component_of(self, v: int) -> int:
		return self.component_index[v]

	def base_of(self, v: int) -> int:
		return self.base[self.component_index[v]]


def mask_members(mask: int) -> List[int]:
	"""Vertex ids of a bitmask, ascending.

	Usage: `mask_members(0b1010)` -> [1, 3]
	"""
	members = []
	while mask:
		low = mask & -mask
		members.append(low.bit_length() - 1)
		mask ^= low
	return members


def members_mask(vertices) -> int:
	mask = 0
	for v in vertices:
		mask |= 1 << v
	return mask
