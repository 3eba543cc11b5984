from enum import Enum
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Tuple

import networkx as nx
from pydantic import BaseModel, ConfigDict

from cubist.core.exceptions import CubistInternalError
from cubist.domain.median.models import Edge, MedianGraph, mask_members


class Relation(str, Enum):
	"""Classification of an ordered hyperplane pair (h, k).

	LESS means h < k, i.e. minus(h) ⊊ minus(k); GREATER is the converse.
	"""

	EQUAL = "equal"
	LESS = "less"
	GREATER = "greater"
	OPPOSITE = "opposite"
	CROSS = "cross"
	DIFFERENT_COMPONENT = "different_component"


_CODES = list(Relation)
_CODE_OF = {relation: code for code, relation in enumerate(_CODES)}


class HyperplaneSet(BaseModel):
	"""Hyperplanes of a median graph with base-oriented halfspaces.

	Hyperplane ids are ordered by (component, distance from the component base
	to the carrier, smallest edge). Halfspaces and carriers are vertex bitmasks;
	sets of hyperplanes are bitmasks over hyperplane ids.
	"""

	model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

	graph: MedianGraph
	classes: Tuple[Tuple[Edge, ...], ...]
	minus_masks: Tuple[int, ...]
	plus_masks: Tuple[int, ...]
	carrier_masks: Tuple[int, ...]
	component: Tuple[int, ...]
	dense_table_limit: int = 2**14

	def __len__(self) -> int:
		return len(self.classes)

	@property
	def ids(self) -> range:
		return range(len(self.classes))

	def side_minus(self, h: int) -> List[int]:
		return mask_members(self.minus_masks[h])

	def side_plus(self, h: int) -> List[int]:
		return mask_members(self.plus_masks[h])

	def carrier(self, h: int) -> List[int]:
		return mask_members(self.carrier_masks[h])

	def in_plus(self, h: int, v: int) -> bool:
		return bool(self.plus_masks[h] >> v & 1)

	@cached_property
	def edge_hyperplane(self) -> Dict[Edge, int]:
		return {edge: h for h, edges in enumerate(self.classes) for edge in edges}

	def hyperplane_of_edge(self, u: int, v: int) -> int:
		return self.edge_hyperplane[(min(u, v), max(u, v))]

	@cached_property
	def component_hyperplanes(self) -> List[List[int]]:
		grouped: List[List[int]] = [[] for _ in self.graph.components]
		for h in self.ids:
			grouped[self.component[h]].append(h)
		return grouped

	@cached_property
	def component_hyperplane_masks(self) -> List[int]:
		return [sum(1 << h for h in group) for group in self.component_hyperplanes]

	@cached_property
	def signatures(self) -> List[int]:
		"""Per vertex, the bitmask of hyperplanes whose plus side contains it.

		Since every base lies on the minus side, this is separating(base, v).
		"""
		sig = [0] * self.graph.vertex_count
		for h in self.ids:
			bit = 1 << h
			for v in mask_members(self.plus_masks[h]):
				sig[v] |= bit
		return sig

	@cached_property
	def vertex_by_signature(self) -> Dict[Tuple[int, int], int]:
		"""(component, signature) -> vertex."""
		return {(self.graph.component_of(v), s): v for v, s in enumerate(self.signatures)}

	def vertex_with_signature(self, component: int, signature: int) -> Optional[int]:
		return self.vertex_by_signature.get((component, signature))

	@cached_property
	def relations(self) -> "RelationTable":
		return RelationTable(self, dense=len(self) <= self.dense_table_limit)

	def classify(self, h: int, k: int) -> Relation:
		"""Classify (h, k) from the halfspace masks.

		Distinct same-component hyperplanes are checked for a minus-minus
		containment first, then for disjoint plus sides; otherwise all four
		quarters meet and they cross.
		"""
		if self.component[h] != self.component[k]:
			return Relation.DIFFERENT_COMPONENT
		if h == k:
			return Relation.EQUAL

		minus_h, minus_k = self.minus_masks[h], self.minus_masks[k]
		if minus_h & ~minus_k == 0:
			return Relation.LESS
		if minus_k & ~minus_h == 0:
			return Relation.GREATER

		plus_h, plus_k = self.plus_masks[h], self.plus_masks[k]
		if plus_h & plus_k == 0:
			return Relation.OPPOSITE
		if minus_h & plus_k == 0 or plus_h & minus_k == 0:
			raise CubistInternalError(f"hyperplanes {h} and {k} fall outside the four-way classification")
		return Relation.CROSS

	@cached_property
	def carrier_distance_rows(self) -> Dict[int, Dict[int, int]]:
		return {}

	def carrier_distance(self, h: int, k: int) -> int:
		"""d(h⁽⁰⁾, k⁽⁰⁾), by multi-source BFS from the smaller carrier, memoised per source."""
		if self.component[h] != self.component[k]:
			raise ValueError(f"hyperplanes {h} and {k} lie in different components")
		source, target = (h, k) if self.carrier_masks[h].bit_count() <= self.carrier_masks[k].bit_count() else (k, h)

		rows = self.carrier_distance_rows
		if source not in rows:
			rows[source] = nx.multi_source_dijkstra_path_length(self.graph.graph, set(self.carrier(source)))
		row = rows[source]
		return min(row[v] for v in self.carrier(target))

	@cached_property
	def base_distances(self) -> Tuple[int, ...]:
		"""d(x₀, h⁽⁰⁾) per hyperplane."""
		result = []
		for h in self.ids:
			row = self.graph.distances[self.graph.base[self.component[h]]]
			result.append(min(row[v] for v in self.carrier(h)))  # pyright: ignore[reportArgumentType]
		return tuple(result)

	def base_distance(self, h: int) -> int:
		return self.base_distances[h]


class RelationTable:
	"""Four-way relation table over a HyperplaneSet.

	Dense tables store one byte per ordered pair and are filled on creation;
	sparse tables memoise pairs on first lookup. Derived per-hyperplane masks
	(hyperplanes below, crossing) are cached separately.
	"""

	def __init__(self, hyperplanes: HyperplaneSet, dense: bool):
		self._hs = hyperplanes
		self._n = len(hyperplanes)
		self._dense: Optional[bytearray] = None
		self._sparse: Dict[Tuple[int, int], Relation] = {}
		self._below: Dict[int, int] = {}
		self._above: Dict[int, int] = {}
		self._crossing: Dict[int, int] = {}
		if dense:
			table = bytearray(self._n * self._n)
			for h in range(self._n):
				for k in range(self._n):
					table[h * self._n + k] = _CODE_OF[hyperplanes.classify(h, k)]
			self._dense = table

	@property
	def is_dense(self) -> bool:
		return self._dense is not None

	def rel(self, h: int, k: int) -> Relation:
		if self._dense is not None:
			return _CODES[self._dense[h * self._n + k]]
		key = (h, k)
		if key not in self._sparse:
			self._sparse[key] = self._hs.classify(h, k)
		return self._sparse[key]

	def less(self, h: int, k: int) -> bool:
		return self.rel(h, k) is Relation.LESS

	def crosses(self, h: int, k: int) -> bool:
		return self.rel(h, k) is Relation.CROSS

	def opposite(self, h: int, k: int) -> bool:
		return self.rel(h, k) is Relation.OPPOSITE

	def below_mask(self, h: int) -> int:
		"""Bitmask of the hyperplanes k with k < h."""
		if h not in self._below:
			mask = 0
			for k in self._hs.component_hyperplanes[self._hs.component[h]]:
				if self.rel(k, h) is Relation.LESS:
					mask |= 1 << k
			self._below[h] = mask
		return self._below[h]

	def crossing_mask(self, h: int) -> int:
		if h not in self._crossing:
			mask = 0
			for k in self._hs.component_hyperplanes[self._hs.component[h]]:
				if self.rel(h, k) is Relation.CROSS:
					mask |= 1 << k
			self._crossing[h] = mask
		return self._crossing[h]

	def between_mask(self, k: int, h: int) -> int:
		"""Bitmask of the j with k < j < h."""
		return self.below_mask(h) & self.above_mask(k)

	def above_mask(self, k: int) -> int:
		"""Bitmask of the hyperplanes j with k < j."""
		if k not in self._above:
			mask = 0
			for j in self._hs.component_hyperplanes[self._hs.component[k]]:
				if self.rel(k, j) is Relation.LESS:
					mask |= 1 << j
			self._above[k] = mask
		return self._above[k]

	def opposite_pairs(self) -> List[Tuple[int, int]]:
		"""H^op as pairs (h, k) with h < k by id."""
		return [(h, k) for h, k in self._same_component_pairs() if self.rel(h, k) is Relation.OPPOSITE]

	def less_pairs(self) -> List[Tuple[int, int]]:
		"""H^< as ordered pairs (h, k) with h < k in the halfspace order."""
		pairs = []
		for h, k in self._same_component_pairs():
			relation = self.rel(h, k)
			if relation is Relation.LESS:
				pairs.append((h, k))
			elif relation is Relation.GREATER:
				pairs.append((k, h))
		return sorted(pairs)

	def crossing_graph(self, hyperplanes: Optional[Iterable[int]] = None) -> nx.Graph:
		"""Graph on the given hyperplanes (all by default) with an edge per crossing pair."""
		nodes = sorted(self._hs.ids if hyperplanes is None else hyperplanes)
		graph = nx.Graph()
		graph.add_nodes_from(nodes)
		for index, h in enumerate(nodes):
			for k in nodes[index + 1 :]:
				if self.rel(h, k) is Relation.CROSS:
					graph.add_edge(h, k)
		return graph

	def _same_component_pairs(self):
		for group in self._hs.component_hyperplanes:
			for index, h in enumerate(group):
				for k in group[index + 1 :]:
					yield h, k
