from collections import defaultdict
from fractions import Fraction
from typing import Dict, Optional

from cubist.core.service.base_service import Service
from cubist.domain.coloring.models import ColoringAssignment
from cubist.domain.cube_space.models import FinSupportPoint
from cubist.domain.cube_space.service.cube_space_service import CubeSpaceService
from cubist.domain.duality.models import QuotientResult
from cubist.domain.hyperplanes.models import HyperplaneSet
from cubist.domain.hyperplanes.service.hyperplane_service import HyperplaneService
from cubist.domain.interpolation.models import WeightFn
from cubist.domain.median.models import mask_members


def default_ell(dimension: int) -> int:
	"""3^(D-1)·D, the weight parameter of a D-dimensional component; 1 when D ≤ 1.

	Usage: `default_ell(2)` -> 6
	"""
	if dimension <= 1:
		return 1
	return 3 ** (dimension - 1) * dimension


class InterpolationService(Service):
	"""The weight function w and the interpolation map Ψ_w : C(X) → C(X_{K_c}).

	Usage: `weights = interpolation.weight_fn(hs, coloring)`
	Usage: `image = interpolation.psi_w(weights, quotient, point)`
	"""

	async def boot(self, **kwargs) -> None:
		self._cube_space = await self.make(CubeSpaceService)
		self._hyperplane_service = await self.make(HyperplaneService)

	async def handle(self, **kwargs) -> FinSupportPoint:
		return self.psi_w(kwargs["weights"], kwargs["quotient"], kwargs["point"])

	def weight_fn(self, hyperplanes: HyperplaneSet, coloring: ColoringAssignment, ell: Optional[int] = None) -> WeightFn:
		"""Weights with ℓ from the argument, then `interpolation.ell`, then the component dimension."""
		override = ell if ell is not None else self._config.interpolation.ell
		ells = tuple(
			override if override is not None else default_ell(self._hyperplane_service.component_dimension(hyperplanes, c))
			for c in range(len(hyperplanes.graph.components))
		)
		return WeightFn(hyperplanes=hyperplanes, coloring=coloring, ell=ells)

	def weight(self, weights: WeightFn, k: int, h: int) -> Fraction:
		"""w(k, h), memoised per pair.

		Usage: `interpolation.weight(weights, 1, 2)` -> Fraction(1, 2) on P5 with ℓ = 1
		"""
		key = (k, h)
		memo = weights.memo
		if key not in memo:
			memo[key] = self._weight(weights, k, h)
		return memo[key]

	def _weight(self, weights: WeightFn, k: int, h: int) -> Fraction:
		ell = weights.ell_of(h)
		if k == h:
			return Fraction(ell, ell + 1)

		relations = weights.hyperplanes.relations
		coloring = weights.coloring
		if not relations.less(k, h) or coloring.color[h] != 1:
			return Fraction(0)
		if relations.between_mask(k, h) & coloring.ones_mask:
			return Fraction(0)
		return Fraction(1, ell + 1)

	def psi_w(self, weights: WeightFn, quotient: QuotientResult, point: FinSupportPoint) -> FinSupportPoint:
		"""(Ψ_w ξ)(k) = min(1, Σ_h w(k, h) ξ(h)) for k ∈ K_c, re-indexed onto the quotient.

		Only k ≤ h contributes, so each supported h feeds itself and the K_c
		hyperplanes below it.
		Usage: `interpolation.psi_w(weights, quotient, cube_space.iota(hs, 2))` -> {0: 1/2} on P5
		"""
		hyperplanes = weights.hyperplanes
		self._cube_space.check_component(hyperplanes, point)

		relations = hyperplanes.relations
		k_c_mask = weights.coloring.k_c_mask
		totals: Dict[int, Fraction] = defaultdict(Fraction)
		for h, value in point.entries.items():
			if k_c_mask >> h & 1:
				totals[h] += self.weight(weights, h, h) * value
			for k in mask_members(relations.below_mask(h) & k_c_mask):
				w = self.weight(weights, k, h)
				if w:
					totals[k] += w * value

		base = hyperplanes.graph.base[point.component]
		component = quotient.graph.component_of(quotient.vertex_map[base])
		entries = {quotient.hyperplane_map[k]: min(Fraction(1), total) for k, total in totals.items() if total}
		return FinSupportPoint(component=component, entries=entries)
