from collections import defaultdict
from itertools import combinations
from typing import Any, Dict, List

import networkx as nx
from networkx.utils import UnionFind

from cubist.core.exceptions import CubistInternalError
from cubist.core.logging import log
from cubist.core.service.base_service import Service
from cubist.domain.hyperplanes.models import HyperplaneSet, Relation
from cubist.domain.median.exceptions import DifferentComponentsError
from cubist.domain.median.models import Edge, MedianGraph, mask_members, members_mask


class HyperplaneService(Service):
	"""Computes hyperplanes, oriented halfspaces and the relation table.

	Usage: `hs = hyperplane_service.compute_hyperplanes(graph)`
	Usage: `hyperplane_service.relation(hs, 0, 1)` -> Relation.CROSS on a square
	"""

	async def handle(self, **kwargs) -> HyperplaneSet:
		return self.compute_hyperplanes(kwargs["graph"])

	def compute_hyperplanes(self, graph: MedianGraph) -> HyperplaneSet:
		"""Edge classes under the square-opposite relation, oriented by component bases.

		Squares are found from vertex pairs at distance two and their common
		neighbours; each square merges its two pairs of opposite edges.
		"""
		adjacency = graph.graph.adj
		classes = UnionFind(graph.edges)

		for u in range(graph.vertex_count):
			second = {w for a in adjacency[u] for w in adjacency[a] if w > u and graph.distances[u][w] == 2}
			for w in second:
				common = sorted(set(adjacency[u]) & set(adjacency[w]))
				for a, b in combinations(common, 2):
					classes.union(_edge(u, a), _edge(b, w))
					classes.union(_edge(u, b), _edge(a, w))

		grouped: Dict[Edge, List[Edge]] = defaultdict(list)
		for edge in graph.edges:
			grouped[classes[edge]].append(edge)

		raw = [self._orient(graph, sorted(edges)) for edges in grouped.values()]
		raw.sort(key=lambda item: (item["component"], item["base_distance"], item["edges"][0]))

		hyperplanes = HyperplaneSet(
			graph=graph,
			classes=tuple(tuple(item["edges"]) for item in raw),
			minus_masks=tuple(item["minus"] for item in raw),
			plus_masks=tuple(item["plus"] for item in raw),
			carrier_masks=tuple(item["carrier"] for item in raw),
			component=tuple(item["component"] for item in raw),
			dense_table_limit=self._config.hyperplanes.dense_table_limit,
		)
		log.debug("computed {} hyperplanes over {} components", len(hyperplanes), len(graph.components))
		return hyperplanes

	def _orient(self, graph: MedianGraph, edges: List[Edge]) -> Dict[str, Any]:
		component = graph.component_of(edges[0][0])
		base = graph.base[component]
		members = graph.components[component]

		without = nx.restricted_view(graph.graph, [], edges)
		if nx.number_connected_components(without.subgraph(members)) != 2:
			raise CubistInternalError(f"removing edge class starting at {edges[0]} does not leave exactly two components")

		minus = members_mask(nx.node_connected_component(without, base))
		plus = graph.component_masks[component] & ~minus
		carrier = members_mask(v for edge in edges for v in edge)
		for u, v in edges:
			if (minus >> u & 1) == (minus >> v & 1):
				raise CubistInternalError(f"edge ({u}, {v}) does not cross its own hyperplane")

		row = graph.distances[base]
		return {
			"edges": edges,
			"component": component,
			"minus": minus,
			"plus": plus,
			"carrier": carrier,
			"base_distance": min(row[v] for v in mask_members(carrier)),  # pyright: ignore[reportArgumentType]
		}

	def relation(self, hyperplanes: HyperplaneSet, h: int, k: int) -> Relation:
		"""Usage: `service.relation(hs, e1, e2)` -> Relation.LESS on the path 0-1-2"""
		return hyperplanes.relations.rel(h, k)

	def separating(self, hyperplanes: HyperplaneSet, x: int, y: int) -> List[int]:
		"""Hyperplanes with x and y on different sides; its size is d(x, y).

		Usage: `service.separating(hs, 0, 4)` -> [0, 1, 2, 3] on P5
		"""
		graph = hyperplanes.graph
		if not graph.same_component(x, y):
			raise DifferentComponentsError((x, y))
		return mask_members(hyperplanes.signatures[x] ^ hyperplanes.signatures[y])

	def dimension(self, hyperplanes: HyperplaneSet) -> int:
		"""Largest number of pairwise crossing hyperplanes dual to edges at one vertex."""
		return max((self.component_dimension(hyperplanes, c) for c in range(len(hyperplanes.graph.components))), default=0)

	def component_dimension(self, hyperplanes: HyperplaneSet, component: int) -> int:
		graph = hyperplanes.graph
		best = 0
		for v in sorted(graph.components[component]):
			incident = {hyperplanes.hyperplane_of_edge(v, u) for u in graph.graph.adj[v]}
			if len(incident) <= best:
				continue
			crossing = hyperplanes.relations.crossing_graph(incident)
			best = max(best, max(len(clique) for clique in nx.find_cliques(crossing)))
		return best

	def to_json(self, hyperplanes: HyperplaneSet) -> Dict[str, Any]:
		"""Dump as `{"hyperplanes": [{"edges": ..., "minus": ..., "plus": ...}]}` plus the relation pairs."""
		relations = hyperplanes.relations
		return {
			"hyperplanes": [
				{
					"id": h,
					"component": hyperplanes.component[h],
					"edges": [list(edge) for edge in hyperplanes.classes[h]],
					"minus": hyperplanes.side_minus(h),
					"plus": hyperplanes.side_plus(h),
					"carrier": hyperplanes.carrier(h),
				}
				for h in hyperplanes.ids
			],
			"less": [list(pair) for pair in relations.less_pairs()],
			"opposite": [list(pair) for pair in relations.opposite_pairs()],
			"cross": sorted(sorted(edge) for edge in relations.crossing_graph().edges),
			"dimension": self.dimension(hyperplanes),
		}


def _edge(u: int, v: int) -> Edge:
	return (u, v) if u < v else (v, u)
