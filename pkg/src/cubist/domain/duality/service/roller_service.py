from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from cubist.core.exceptions import CubistInternalError
from cubist.core.logging import log
from cubist.core.service.base_service import Service
from cubist.domain.duality.exceptions import InvalidPocsetError, NotConvexError
from cubist.domain.duality.models import Pocset, Ultrafilter
from cubist.domain.hyperplanes.models import HyperplaneSet, Relation
from cubist.domain.median.exceptions import DifferentComponentsError, EmptySetError
from cubist.domain.median.models import MedianGraph, RawGraph, members_mask
from cubist.domain.median.service.median_service import MedianService


class RollerService(Service):
	"""Pocsets, their ultrafilters and the dual median graph, plus gates onto convex sets.

	Usage: `pocset = roller.pocset_from_hyperplanes(hs, 0)`
	Usage: `dual = roller.dual_graph(roller.enumerate_ultrafilters(pocset))`
	"""

	async def boot(self, **kwargs) -> None:
		self._median_service = await self.make(MedianService)

	async def handle(self, **kwargs) -> List[Ultrafilter]:
		return self.enumerate_ultrafilters(kwargs["pocset"])

	def pocset_from_hyperplanes(self, hyperplanes: HyperplaneSet, component: int) -> Pocset:
		"""The halfspace system of one component, indexed in hyperplane id order.

		Ids already ascend with the distance from the base to the carrier, which is
		the backtracking order.
		"""
		labels = tuple(hyperplanes.component_hyperplanes[component])
		relations = hyperplanes.relations
		table = {
			(i, j): relations.rel(labels[i], labels[j]) for i in range(len(labels)) for j in range(i + 1, len(labels))
		}
		return Pocset(size=len(labels), relations=table, order=tuple(range(len(labels))), labels=labels)

	def pocset_from_walls(self, point_count: int, walls: Iterable[int]) -> Pocset:
		"""Pocset of the walls of a finite point set, oriented so that point 0 is on every minus side.

		A wall is a bitmask of the points on one of its sides. The relation of two
		walls is read off which of the four quarters are empty.
		Usage: `roller.pocset_from_walls(3, [0b001, 0b011])` -> the pocset of P3
		"""
		full = (1 << point_count) - 1
		plus_sides = set()
		for wall in walls:
			side = wall & full
			if side & 1:
				side = full & ~side
			if side == 0:
				raise InvalidPocsetError(f"wall {wall:#b} does not split the {point_count} points")
			plus_sides.add(side)

		plus = sorted(plus_sides, key=lambda side: (side.bit_count(), side), reverse=True)
		minus = [full & ~side for side in plus]
		table: Dict[Tuple[int, int], Relation] = {}
		for i in range(len(plus)):
			for j in range(i + 1, len(plus)):
				table[(i, j)] = _relation_from_quarters(minus[i], plus[i], minus[j], plus[j])

		depth = [sum(1 for j in range(len(plus)) if plus[j] & ~plus[i] == 0 and i != j) for i in range(len(plus))]
		order = tuple(sorted(range(len(plus)), key=lambda i: (-depth[i], i)))
		return Pocset(size=len(plus), relations=table, order=order, labels=tuple(range(len(plus))))

	def enumerate_ultrafilters(self, pocset: Pocset, limit: Optional[int] = None) -> List[Ultrafilter]:
		"""All consistent side choices, by backtracking with forward checking.

		Results are sorted by number of plus sides, then by mask. With `limit`
		the search stops once more than `limit` ultrafilters have been found.
		Usage: `roller.enumerate_ultrafilters(pocset)` -> 4 ultrafilters for a square
		"""
		found: List[int] = []
		order = pocset.order
		forbidden = pocset.forbidden
		full = (1 << pocset.size) - 1

		def extend(depth: int, assigned: int, plus_mask: int, no_minus: int, no_plus: int) -> None:
			if limit is not None and len(found) > limit:
				return
			if depth == len(order):
				found.append(plus_mask)
				return

			i = order[depth]
			bit = 1 << i
			now_assigned = assigned | bit
			for side, blocked in ((0, no_minus), (1, no_plus)):
				if blocked & bit:
					continue
				block_minus, block_plus = forbidden[i][side]
				next_minus = no_minus | block_minus
				next_plus = no_plus | block_plus
				if next_minus & next_plus & full & ~now_assigned:
					continue
				extend(depth + 1, now_assigned, plus_mask | (bit if side else 0), next_minus, next_plus)

		extend(0, 0, 0, 0, 0)
		found.sort(key=lambda mask: (mask.bit_count(), mask))
		return [Ultrafilter(size=pocset.size, plus_mask=mask) for mask in found]

	def dual_graph(self, ultrafilters: Sequence[Ultrafilter]) -> MedianGraph:
		"""Graph on the ultrafilters, adjacent when they differ on exactly one halfspace.

		Vertex i is the i-th ultrafilter; the result is validated as a median graph.
		"""
		index = {uf.plus_mask: i for i, uf in enumerate(ultrafilters)}
		size = ultrafilters[0].size if ultrafilters else 0
		edges = set()
		for i, uf in enumerate(ultrafilters):
			for h in range(size):
				j = index.get(uf.plus_mask ^ (1 << h))
				if j is not None:
					edges.add((min(i, j), max(i, j)))
		return self._median_service.validate_median(RawGraph(vertices=len(ultrafilters), edges=sorted(edges)))

	def vertex_ultrafilter(self, pocset: Pocset, hyperplanes: HyperplaneSet, v: int) -> Ultrafilter:
		"""The principal ultrafilter α_v: the side of each halfspace containing v."""
		self._median_service.require_vertices(hyperplanes.graph, v)
		if pocset.labels and hyperplanes.component[pocset.labels[0]] != hyperplanes.graph.component_of(v):
			raise DifferentComponentsError((v,))
		plus = [i for i, h in enumerate(pocset.labels) if hyperplanes.in_plus(h, v)]
		return Ultrafilter.from_plus(pocset.size, plus)

	def ultrafilter_median(self, a: Ultrafilter, b: Ultrafilter, c: Ultrafilter) -> Ultrafilter:
		"""Majority vote on every halfspace.

		Usage: `roller.ultrafilter_median(alpha_x, alpha_y, alpha_z)` -> alpha of the graph median
		"""
		mask = (a.plus_mask & b.plus_mask) | (b.plus_mask & c.plus_mask) | (a.plus_mask & c.plus_mask)
		return Ultrafilter(size=a.size, plus_mask=mask)

	def gate(self, hyperplanes: HyperplaneSet, origin: int, target: Iterable[int]) -> int:
		"""The vertex of a convex set C nearest to the origin.

		Its side on h is the side containing C when C lies on one side of h, and
		the origin's side otherwise.
		Usage: `roller.gate(hs, 0, [1, 3])` -> 1 on the square 0-1-3-2 based at 0
		"""
		graph = hyperplanes.graph
		members = sorted(set(target))
		if not members:
			raise EmptySetError("the gate target must be non-empty")
		self._median_service.require_vertices(graph, origin, *members)
		if not graph.same_component(origin, *members):
			raise DifferentComponentsError((origin, *members))
		if not self._median_service.is_convex(graph, members):
			raise NotConvexError(f"{members} is not convex, hence not an intersection of halfspaces")

		component = graph.component_of(origin)
		mask = members_mask(members)
		signature = 0
		for h in hyperplanes.component_hyperplanes[component]:
			if mask & ~hyperplanes.plus_masks[h] == 0:
				signature |= 1 << h
			elif mask & ~hyperplanes.minus_masks[h] and hyperplanes.in_plus(h, origin):
				signature |= 1 << h

		gate = hyperplanes.vertex_with_signature(component, signature)
		if gate is None or not mask >> gate & 1:
			raise CubistInternalError(f"side formula gave no vertex of {members} for origin {origin}")
		if self._config.development.enable:
			self._check_gate_by_distance(graph, origin, members, gate)
		return gate

	def _check_gate_by_distance(self, graph: MedianGraph, origin: int, members: List[int], gate: int) -> None:
		nearest = min(graph.distance(origin, v) for v in members)
		closest = [v for v in members if graph.distance(origin, v) == nearest]
		if closest != [gate]:
			raise CubistInternalError(f"gate {gate} disagrees with the nearest points {closest} of {members}")
		log.debug("gate {} of {} from {} cross-checked by distance", gate, members, origin)

	def to_dot(self, graph: MedianGraph, ultrafilters: Sequence[Ultrafilter]) -> str:
		lines = ["graph roller {"]
		for i, uf in enumerate(ultrafilters):
			plus = ",".join(str(h) for h in range(uf.size) if uf.plus_mask >> h & 1)
			lines.append(f'\t{i} [label="{{{plus}}}"];')
		for u, v in graph.edges:
			lines.append(f"\t{u} -- {v};")
		lines.append("}")
		return "\n".join(lines) + "\n"


def _relation_from_quarters(minus_h: int, plus_h: int, minus_k: int, plus_k: int) -> Relation:
	if minus_h & plus_k == 0:
		return Relation.LESS
	if plus_h & minus_k == 0:
		return Relation.GREATER
	if plus_h & plus_k == 0:
		return Relation.OPPOSITE
	return Relation.CROSS
