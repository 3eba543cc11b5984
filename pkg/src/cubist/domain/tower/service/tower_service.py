import asyncio
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from cubist.core.logging import log
from cubist.core.service.base_service import Service
from cubist.core.utils import fraction_to_str
from cubist.domain.coloring.service.coloring_service import ColoringService
from cubist.domain.cube_space.models import FinSupportPoint
from cubist.domain.cube_space.service.cube_space_service import CubeSpaceService
from cubist.domain.duality.service.quotient_service import QuotientService
from cubist.domain.hyperplanes.models import HyperplaneSet
from cubist.domain.interpolation.service.interpolation_service import InterpolationService
from cubist.domain.median.exceptions import UnknownVertexError
from cubist.domain.projection.service.projection_service import ProjectionService
from cubist.domain.tower.exceptions import BudgetExceededError, InvalidEpsilonError
from cubist.domain.tower.models import CobornologyReport, LipschitzReport, TowerMap, TowerStage


def required_stages(constant: Fraction, epsilon: Fraction) -> int:
	"""Least N ≥ 1 with constant^N < epsilon.

	Usage: `required_stages(Fraction(6, 7), Fraction(1, 2))` -> 5
	Usage: `required_stages(Fraction(1, 2), Fraction(1, 8))` -> 4
	"""
	if not 0 < constant < 1:
		raise ValueError(f"stage constant must lie in (0, 1), got {constant}")
	if epsilon <= 0:
		raise ValueError(f"epsilon must be positive, got {epsilon}")
	n, product = 1, constant
	while product >= epsilon:
		n += 1
		product *= constant
	return n


class TowerService(Service):
	"""Quotient towers: colour, quotient by K_c, interpolate with Ψ_w, project with P, repeat.

	Usage: `tower = tower_service.build_tower(hs, Fraction(1, 2))`
	Usage: `image = tower_service.apply(tower, 7)`
	"""

	async def boot(self, **kwargs) -> None:
		self._coloring_service = await self.make(ColoringService)
		self._quotient_service = await self.make(QuotientService)
		self._interpolation = await self.make(InterpolationService)
		self._projection = await self.make(ProjectionService)
		self._cube_space = await self.make(CubeSpaceService)

	async def handle(self, **kwargs) -> TowerMap:
		return self.build_tower(kwargs["hyperplanes"], kwargs["epsilon"], kwargs.get("ell"))

	def build_stage(self, hyperplanes: HyperplaneSet, index: int, ell: Optional[int] = None) -> TowerStage:
		coloring = self._coloring_service.compute_coloring(hyperplanes)
		weights = self._interpolation.weight_fn(hyperplanes, coloring, ell)
		quotient = self._quotient_service.quotient(hyperplanes, coloring.k_c)
		return TowerStage(index=index, source=hyperplanes, coloring=coloring, quotient=quotient, weights=weights)

	def build_tower(self, hyperplanes: HyperplaneSet, epsilon: Fraction, ell: Optional[int] = None) -> TowerMap:
		"""Add stages until the product of stage constants drops strictly below epsilon.

		A stage whose quotient has no hyperplanes left collapses every component to
		its base; the tower stops there and the map is constant.
		Usage: `service.build_tower(hs, Fraction(1))` -> a one-stage tower
		"""
		epsilon = Fraction(epsilon)
		if not 0 < epsilon <= 1:
			raise InvalidEpsilonError(f"epsilon must lie in (0, 1], got {fraction_to_str(epsilon)}")

		max_stages = self._config.tower.max_stages
		stages: List[TowerStage] = []
		notes: List[str] = []
		product = Fraction(1)
		collapsed = False
		current = hyperplanes
		while product >= epsilon:
			if len(stages) == max_stages:
				raise BudgetExceededError(
					f"epsilon {fraction_to_str(epsilon)} needs more than {max_stages} stages "
					f"(product after {max_stages} is {fraction_to_str(product)})"
				)

			stage = self.build_stage(current, len(stages) + 1, ell)
			stages.append(stage)
			product *= stage.constant
			log.info(
				"tower stage {}: {} -> {} vertices, constant {}",
				stage.index,
				current.graph.vertex_count,
				stage.quotient.graph.vertex_count,
				fraction_to_str(stage.constant),
			)

			current = stage.target
			if len(current) == 0:
				collapsed = True
				notes.append(f"stage {stage.index}: the quotient has no hyperplanes, every component collapses to its base")
				break

		return TowerMap(
			epsilon=epsilon,
			stages=tuple(stages),
			constant_product=product,
			collapsed=collapsed,
			notes=tuple(notes),
		)

	def apply_point(self, tower: TowerMap, point: FinSupportPoint) -> FinSupportPoint:
		"""Push a C(X) point through every stage, decoding after each projection."""
		for stage in tower.stages:
			point = self._interpolation.psi_w(stage.weights, stage.quotient, point)
			point = self._projection.retract(stage.target, point)
			self._projection.decode_retracted(stage.target, point)
		return point

	def apply(self, tower: TowerMap, x: int) -> FinSupportPoint:
		"""f(x) for a vertex of the source graph.

		Usage: `service.apply(tower, 3)` -> ι of quotient vertex 1 on P5 after one stage
		"""
		return self.apply_point(tower, self._cube_space.iota(tower.source, x))

	async def apply_all(self, tower: TowerMap, threads: Optional[int] = None) -> List[FinSupportPoint]:
		"""f on every source vertex, with at most `threads` vertices in flight.

		Usage: `images = await service.apply_all(tower, threads=4)`
		"""
		workers = threads or self._config.cli.threads
		self._prime(tower)
		semaphore = asyncio.Semaphore(workers)

		async def image_of(x: int) -> FinSupportPoint:
			async with semaphore:
				return await asyncio.to_thread(self.apply, tower, x)

		vertices = range(tower.source.graph.vertex_count)
		images = await asyncio.gather(*(image_of(x) for x in vertices))
		log.debug("applied a {}-stage tower to {} vertices with {} workers", tower.n, len(images), workers)
		return list(images)

	def _prime(self, tower: TowerMap) -> None:
		"""Build the lazily cached tables before worker threads read them."""
		for stage in tower.stages:
			for hs in (stage.source, stage.target):
				hs.signatures
				hs.vertex_by_signature
				hs.relations
				hs.graph.distances
			stage.coloring.k_c_mask
			stage.coloring.ones_mask
			stage.weights.memo

	def verify_lipschitz(self, tower: TowerMap, images: Optional[Sequence[FinSupportPoint]] = None) -> LipschitzReport:
		"""Largest l1(f(x), f(y)) / d(x, y) over same-component vertex pairs.

		Usage: `service.verify_lipschitz(tower).ok` -> True
		"""
		images = self._images(tower, images)
		graph = tower.source.graph
		observed = Fraction(0)
		worst: Optional[Tuple[int, int]] = None
		for x, y in self._pairs(tower):
			ratio = self._cube_space.l1_distance(images[x], images[y]) / graph.distance(x, y)
			if ratio > observed:
				observed, worst = Fraction(ratio), (x, y)

		bound = tower.lipschitz_bound
		report = LipschitzReport(observed=observed, bound=bound, ok=observed <= bound, worst_pair=worst)
		log.info("observed Lipschitz constant {} against bound {}", fraction_to_str(observed), fraction_to_str(bound))
		return report

	def verify_cobornologous(self, tower: TowerMap, images: Optional[Sequence[FinSupportPoint]] = None) -> CobornologyReport:
		"""For each t, the least image distance over pairs at source distance ≥ t.

		The table is a suffix minimum, so it never decreases in t.
		"""
		images = self._images(tower, images)
		graph = tower.source.graph
		closest: Dict[int, Fraction] = {}
		for x, y in self._pairs(tower):
			d = int(graph.distance(x, y))
			value = Fraction(self._cube_space.l1_distance(images[x], images[y]))
			if d not in closest or value < closest[d]:
				closest[d] = value

		control: List[Tuple[int, Fraction]] = []
		running: Optional[Fraction] = None
		for t in range(max(closest, default=0), 0, -1):
			if t in closest:
				running = closest[t] if running is None else min(running, closest[t])
			if running is not None:
				control.append((t, running))
		control.reverse()
		return CobornologyReport(control=control)

	def _images(self, tower: TowerMap, images: Optional[Sequence[FinSupportPoint]]) -> Sequence[FinSupportPoint]:
		graph = tower.source.graph
		budget = self._config.tower.vertex_budget
		if graph.vertex_count > budget:
			raise BudgetExceededError(f"{graph.vertex_count} vertices exceed the verification budget of {budget}")
		if images is None:
			return [self.apply(tower, x) for x in range(graph.vertex_count)]
		if len(images) != graph.vertex_count:
			raise UnknownVertexError(f"expected {graph.vertex_count} images, got {len(images)}")
		return images

	def _pairs(self, tower: TowerMap) -> List[Tuple[int, int]]:
		graph = tower.source.graph
		return [pair for component in graph.components for pair in combinations(sorted(component), 2)]
