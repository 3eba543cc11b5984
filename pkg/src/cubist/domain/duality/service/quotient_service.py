from typing import Dict, Iterable, List, Tuple

from cubist.core.exceptions import CubistInternalError
from cubist.core.logging import log
from cubist.core.service.base_service import Service
from cubist.domain.duality.models import QuotientResult
from cubist.domain.hyperplanes.exceptions import UnknownHyperplaneError
from cubist.domain.hyperplanes.models import HyperplaneSet
from cubist.domain.hyperplanes.service.hyperplane_service import HyperplaneService
from cubist.domain.median.models import MedianGraph, RawGraph, mask_members, members_mask
from cubist.domain.median.service.median_service import MedianService


class QuotientService(Service):
	"""Quotients of a median graph by hyperplane subsets.

	Two vertices are identified when every h ∈ K puts them on the same side;
	classes are adjacent when exactly one h ∈ K separates them.
	Usage: `quotient = quotient_service.quotient(hs, [1, 3])`
	"""

	async def boot(self, **kwargs) -> None:
		self._median_service = await self.make(MedianService)
		self._hyperplane_service = await self.make(HyperplaneService)

	async def handle(self, **kwargs) -> QuotientResult:
		return self.quotient(kwargs["hyperplanes"], kwargs["kept"])

	def quotient(self, hyperplanes: HyperplaneSet, kept: Iterable[int]) -> QuotientResult:
		"""Build X_K, re-validate it and match K with the quotient hyperplanes.

		The base of each quotient component is the class of the original base.
		Usage: `service.quotient(hs, [])` collapses every component to one vertex
		"""
		graph = hyperplanes.graph
		kept = sorted(set(kept))
		for h in kept:
			if not 0 <= h < len(hyperplanes):
				raise UnknownHyperplaneError(f"hyperplane {h} does not exist; ids run 0..{len(hyperplanes) - 1}")
		kept_mask = members_mask(kept)

		class_of: Dict[Tuple[int, int], int] = {}
		vertex_map: List[int] = []
		for v in range(graph.vertex_count):
			key = (graph.component_of(v), hyperplanes.signatures[v] & kept_mask)
			if key not in class_of:
				class_of[key] = len(class_of)
			vertex_map.append(class_of[key])

		edges = set()
		for (component, signature), image in class_of.items():
			for h in mask_members(hyperplanes.component_hyperplane_masks[component] & kept_mask):
				neighbour = class_of.get((component, signature ^ (1 << h)))
				if neighbour is not None:
					edges.add((min(image, neighbour), max(image, neighbour)))

		draft = MedianGraph.from_edges(len(class_of), edges)
		base = {draft.component_of(vertex_map[b]): vertex_map[b] for b in graph.base}
		quotient_graph = self._median_service.validate_median(RawGraph(vertices=len(class_of), edges=sorted(edges), base=base))
		quotient_hyperplanes = self._hyperplane_service.compute_hyperplanes(quotient_graph)

		hyperplane_map: Dict[int, int] = {}
		for h in kept:
			u, v = hyperplanes.classes[h][0]
			hyperplane_map[h] = quotient_hyperplanes.hyperplane_of_edge(vertex_map[u], vertex_map[v])
		if sorted(hyperplane_map.values()) != list(quotient_hyperplanes.ids):
			raise CubistInternalError(f"quotient by {kept} does not induce a bijection on hyperplanes")

		log.debug("quotient by {} hyperplanes: {} -> {} vertices", len(kept), graph.vertex_count, quotient_graph.vertex_count)
		return QuotientResult(
			kept=tuple(kept),
			graph=quotient_graph,
			hyperplanes=quotient_hyperplanes,
			vertex_map=tuple(vertex_map),
			hyperplane_map=hyperplane_map,
		)

	def to_dot(self, quotient: QuotientResult) -> str:
		"""DOT rendering with each quotient vertex labelled by its class."""
		lines = ["graph quotient {"]
		for image, members in enumerate(quotient.classes):
			label = ",".join(str(v) for v in members)
			lines.append(f'\t{image} [label="{image}: {{{label}}}"];')
		for u, v in quotient.graph.edges:
			h = quotient.hyperplanes.hyperplane_of_edge(u, v)
			lines.append(f'\t{u} -- {v} [label="{h}"];')
		lines.append("}")
		return "\n".join(lines) + "\n"
