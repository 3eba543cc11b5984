from fractions import Fraction
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

import networkx as nx

from cubist.core.exceptions import CubistPropertyViolation
from cubist.core.logging import log
from cubist.core.service.base_service import Service
from cubist.core.utils import fraction_to_str
from cubist.domain.cover.exceptions import InvalidRadiusError
from cubist.domain.cover.models import CoverCertificate, CoverComponent, CoverLevel
from cubist.domain.cover.service.delta_service import DeltaService
from cubist.domain.cover.service.triangulation_service import TriangulationService
from cubist.domain.cube_space.models import FinSupportPoint
from cubist.domain.cube_space.service.cube_space_service import CubeSpaceService
from cubist.domain.hyperplanes.models import HyperplaneSet
from cubist.domain.hyperplanes.service.hyperplane_service import HyperplaneService
from cubist.domain.median.models import MedianGraph
from cubist.domain.tower.models import TowerMap
from cubist.domain.tower.service.tower_service import TowerService

StarVertex = Tuple[int, str]


def cover_epsilon(delta: Optional[Fraction], r: Fraction) -> Fraction:
	"""δ/(r+1) capped at 1; 1 when there are no cubes.

	Usage: `cover_epsilon(Fraction(1, 4), Fraction(1))` -> Fraction(1, 8)
	"""
	if delta is None:
		return Fraction(1)
	return min(Fraction(1), delta / (r + 1))


class CoverService(Service):
	"""Builds the cover U_ℓ = f⁻¹(S_ℓ), ℓ = 0..D, of a complex's vertices.

	f is the tower map at ε = δ/(r+1). A vertex joins every level its image's
	star levels name, so the sets may overlap. Each r-component of U_ℓ comes
	with its diameter and the T₁ vertex whose star holds all of its images.
	Usage: `certificate = await cover_service.build_cover(hs, Fraction(2))`
	"""

	async def boot(self, **kwargs) -> None:
		self._hyperplane_service = await self.make(HyperplaneService)
		self._delta_service = await self.make(DeltaService)
		self._tower_service = await self.make(TowerService)
		self._cube_space = await self.make(CubeSpaceService)
		self._triangulation = await self.make(TriangulationService)

	async def handle(self, **kwargs) -> CoverCertificate:
		return await self.build_cover(kwargs["hyperplanes"], kwargs["r"])

	async def build_cover(
		self,
		hyperplanes: HyperplaneSet,
		r: Fraction,
		ell: Optional[int] = None,
		threads: Optional[int] = None,
	) -> CoverCertificate:
		r = Fraction(r)
		if r <= 0:
			raise InvalidRadiusError(f"r must be positive, got {fraction_to_str(r)}")

		dimension = self._hyperplane_service.dimension(hyperplanes)
		delta = self._delta_service.separation_constant(dimension)
		epsilon = cover_epsilon(delta, r)
		tower = self._tower_service.build_tower(hyperplanes, epsilon, ell)
		images = await self._tower_service.apply_all(tower, threads)
		stars = self.classify(tower, images)

		certificate = self.assemble(hyperplanes.graph, r, delta, epsilon, dimension, tower, stars)
		self._self_check(certificate, hyperplanes.graph)
		log.info(
			"cover of {} vertices at r = {}: {} stages, M = {}",
			hyperplanes.graph.vertex_count,
			fraction_to_str(r),
			tower.n,
			certificate.max_diameter,
		)
		return certificate

	def classify(self, tower: TowerMap, images: Sequence[FinSupportPoint]) -> List[List[StarVertex]]:
		"""Star vertices of every image, decoded in the last complex of the tower."""
		target = tower.target
		return [self._triangulation.star_vertices(target, self._cube_space.decode(target, image)) for image in images]

	def assemble(
		self,
		graph: MedianGraph,
		r: Fraction,
		delta: Optional[Fraction],
		epsilon: Fraction,
		dimension: int,
		tower: TowerMap,
		stars: Sequence[Sequence[StarVertex]],
	) -> CoverCertificate:
		levels = []
		for level in range(dimension + 1):
			members = [x for x in range(graph.vertex_count) if any(lv == level for lv, _ in stars[x])]
			components = []
			for group in self.r_components(graph, members, r):
				components.append(
					CoverComponent(
						vertices=tuple(group),
						diameter=self.diameter(graph, group),
						star=self._witness(level, group, stars),
					)
				)
			levels.append(CoverLevel(level=level, vertices=tuple(members), components=tuple(components)))

		max_diameter = max((c.diameter for lv in levels for c in lv.components), default=0)
		return CoverCertificate(
			r=r,
			delta=delta,
			epsilon=epsilon,
			n=tower.n,
			dimension=dimension,
			collapsed=tower.collapsed,
			levels=tuple(levels),
			max_diameter=max_diameter,
		)

	def r_components(self, graph: MedianGraph, members: Sequence[int], r: Fraction) -> List[List[int]]:
		"""Classes of `members` under chains of steps of length at most r, sorted by least vertex."""
		chained = nx.Graph()
		chained.add_nodes_from(members)
		chained.add_edges_from((x, y) for x, y in combinations(members, 2) if graph.distance(x, y) <= r)
		return sorted((sorted(c) for c in nx.connected_components(chained)), key=lambda c: c[0])

	def diameter(self, graph: MedianGraph, vertices: Sequence[int]) -> int:
		return max((int(graph.distance(x, y)) for x, y in combinations(vertices, 2)), default=0)

	def _witness(self, level: int, group: Sequence[int], stars: Sequence[Sequence[StarVertex]]) -> str:
		common = None
		for x in group:
			ids = {star for lv, star in stars[x] if lv == level}
			common = ids if common is None else common & ids
		if not common:
			raise CubistPropertyViolation(f"the level {level} component {list(group)} meets no common star")
		return min(common)

	def _self_check(self, certificate: CoverCertificate, graph: MedianGraph) -> None:
		covered = set()
		for level in certificate.levels:
			covered.update(level.vertices)
			for component in level.components:
				if component.diameter > certificate.max_diameter:
					raise CubistPropertyViolation(f"component {list(component.vertices)} exceeds the reported M")
		missing = sorted(set(range(graph.vertex_count)) - covered)
		if missing:
			raise CubistPropertyViolation(f"vertices {missing} lie in no U_ℓ")
