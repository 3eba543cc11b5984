from fractions import Fraction
from itertools import combinations
from typing import Iterator, Union

from cubist.core.service.base_service import Service
from cubist.domain.cube_space.exceptions import ComponentMismatchError, NotInImageError
from cubist.domain.cube_space.models import CubePoint, FinSupportPoint
from cubist.domain.hyperplanes.models import HyperplaneSet
from cubist.domain.median.exceptions import UnknownVertexError
from cubist.domain.median.models import INFINITY, mask_members, members_mask


class CubeSpaceService(Service):
	"""The ℓ¹ cube space C(X): the vertex embedding ι, its affine extension to cube
	points, decoding back to cube points and exact distances.

	Usage: `point = cube_space.iota(hs, 2)`
	Usage: `cube = cube_space.decode(hs, point)`
	"""

	async def handle(self, **kwargs) -> FinSupportPoint:
		return self.iota(kwargs["hyperplanes"], kwargs["vertex"])

	def iota(self, hyperplanes: HyperplaneSet, x: int) -> FinSupportPoint:
		"""Indicator of the hyperplanes separating the component base from x.

		Usage: `cube_space.iota(hs, 2)` -> {e1: 1, e2: 1} on P5 with base 0
		"""
		graph = hyperplanes.graph
		if not 0 <= x < graph.vertex_count:
			raise UnknownVertexError(f"vertex {x} is not in 0..{graph.vertex_count - 1}")
		ones = {h: Fraction(1) for h in mask_members(hyperplanes.signatures[x])}
		return FinSupportPoint(component=graph.component_of(x), entries=ones)

	def encode(self, hyperplanes: HyperplaneSet, point: CubePoint) -> FinSupportPoint:
		"""Affine extension of ι: ones on the corner's separating set plus the fractional coordinates."""
		corner = self.iota(hyperplanes, point.vertex)
		for h in point.frac:
			if h >= len(hyperplanes) or hyperplanes.component[h] != corner.component:
				raise ComponentMismatchError(f"hyperplane {h} does not belong to component {corner.component}")
			if corner.value(h):
				raise NotInImageError(
					NotInImageError.NO_CUBE_AT_VERTEX,
					f"hyperplane {h} already separates vertex {point.vertex} from the base",
				)
		return corner.replace(point.frac)

	def decode(self, hyperplanes: HyperplaneSet, point: FinSupportPoint) -> CubePoint:
		"""Inverse of the extended ι on its image.

		The coordinates equal to 1 must be the separating set of a vertex v; the
		fractional ones must pairwise cross and span a cube whose corner nearest
		the base is v.
		Usage: `cube_space.decode(hs, FinSupportPoint(component=0, entries={0: 1, 1: Fraction(1, 2)}))`
		"""
		self.check_component(hyperplanes, point)

		ones = members_mask(h for h, q in point.entries.items() if q == 1)
		frac = [h for h, q in point.entries.items() if q != 1]

		vertex = hyperplanes.vertex_with_signature(point.component, ones)
		if vertex is None:
			raise NotInImageError(
				NotInImageError.NO_VERTEX_FOR_ONES,
				f"no vertex is separated from the base by exactly {mask_members(ones)}",
			)

		relations = hyperplanes.relations
		for h, k in combinations(frac, 2):
			if not relations.crosses(h, k):
				raise NotInImageError(
					NotInImageError.FRAC_NOT_CROSSING,
					f"fractional hyperplanes {h} and {k} do not cross",
				)

		for subset in _submasks(members_mask(frac)):
			if hyperplanes.vertex_with_signature(point.component, ones | subset) is None:
				raise NotInImageError(
					NotInImageError.NO_CUBE_AT_VERTEX,
					f"hyperplanes {frac} do not span a cube at vertex {vertex}",
				)

		return CubePoint(vertex=vertex, frac={h: point.entries[h] for h in frac})

	def l1_distance(self, a: FinSupportPoint, b: FinSupportPoint) -> Union[Fraction, float]:
		"""Σ |a(h) - b(h)|, or infinity across components.

		Usage: `cube_space.l1_distance(a, b)` -> Fraction(5, 12)
		"""
		if a.component != b.component:
			return INFINITY
		return sum((abs(a.value(h) - b.value(h)) for h in set(a.entries) | set(b.entries)), Fraction(0))

	def check_component(self, hyperplanes: HyperplaneSet, point: FinSupportPoint) -> None:
		"""Raise ComponentMismatchError unless the support lies in the point's component."""
		if not 0 <= point.component < len(hyperplanes.graph.components):
			raise ComponentMismatchError(f"component {point.component} does not exist")
		for h in point.entries:
			if h >= len(hyperplanes):
				raise ComponentMismatchError(f"hyperplane {h} does not exist")
			if hyperplanes.component[h] != point.component:
				raise ComponentMismatchError(
					f"hyperplane {h} lies in component {hyperplanes.component[h]}, the point in {point.component}"
				)


def _submasks(mask: int) -> Iterator[int]:
	subset = mask
	while True:
		yield subset
		if subset == 0:
			return
		subset = (subset - 1) & mask
