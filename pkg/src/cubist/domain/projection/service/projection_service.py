from fractions import Fraction
from itertools import combinations
from typing import Any, Callable, List, Optional, Tuple

from cubist.core.exceptions import CubistInternalError
from cubist.core.service.base_service import Service
from cubist.domain.cube_space.exceptions import NotInImageError
from cubist.domain.cube_space.models import CubePoint, FinSupportPoint
from cubist.domain.cube_space.service.cube_space_service import CubeSpaceService
from cubist.domain.hyperplanes.models import HyperplaneSet
from cubist.domain.median.models import mask_members
from cubist.domain.projection.exceptions import NotLessError, NotOppositeError, OpSupportNonemptyError
from cubist.domain.projection.models import Pair, PairSupport

PairKey = Callable[[Pair], Any]


def p_op(x: Fraction, y: Fraction) -> Tuple[Fraction, Fraction]:
	"""(x - y, 0) if x ≥ y, else (0, y - x).

	Usage: `p_op(Fraction(3, 5), Fraction(3, 10))` -> (Fraction(3, 10), 0)
	"""
	if x >= y:
		return x - y, Fraction(0)
	return Fraction(0), y - x


def p_less(x: Fraction, y: Fraction) -> Tuple[Fraction, Fraction]:
	"""(x + y, 0) if x + y ≤ 1, else (1, x + y - 1).

	Usage: `p_less(Fraction(3, 4), Fraction(1, 2))` -> (1, Fraction(1, 4))
	"""
	total = x + y
	if total <= 1:
		return total, Fraction(0)
	return Fraction(1), total - 1


class ProjectionService(Service):
	"""The elementary moves p^op and p^< and the projection P = P^< ∘ P^op onto ι(X).

	Usage: `cube = projection.project(hs, point)`
	"""

	async def boot(self, **kwargs) -> None:
		self._cube_space = await self.make(CubeSpaceService)

	async def handle(self, **kwargs) -> CubePoint:
		return self.project(kwargs["hyperplanes"], kwargs["point"])

	def op_support(self, hyperplanes: HyperplaneSet, point: FinSupportPoint) -> List[Pair]:
		relations = hyperplanes.relations
		return [(h, k) for h, k in combinations(point.support, 2) if relations.opposite(h, k)]

	def less_support(self, hyperplanes: HyperplaneSet, point: FinSupportPoint) -> List[Pair]:
		relations = hyperplanes.relations
		pairs = []
		for k in point.support:
			for h in mask_members(relations.below_mask(k)):
				if point.value(h) != 1:
					pairs.append((h, k))
		return sorted(pairs)

	def pair_support(self, hyperplanes: HyperplaneSet, point: FinSupportPoint) -> PairSupport:
		"""Usage: `projection.pair_support(hs, point).op_pairs`"""
		return PairSupport(
			op_pairs=tuple(self.op_support(hyperplanes, point)),
			less_pairs=tuple(self.less_support(hyperplanes, point)),
		)

	def p_op_pair(self, hyperplanes: HyperplaneSet, point: FinSupportPoint, h: int, k: int) -> FinSupportPoint:
		"""Replace (ξ(h), ξ(k)) by p^op of them; h and k must be opposite."""
		if not hyperplanes.relations.opposite(h, k):
			raise NotOppositeError(f"hyperplanes {h} and {k} are {hyperplanes.relations.rel(h, k).value}, not opposite")
		x, y = p_op(point.value(h), point.value(k))
		return point.replace({h: x, k: y})

	def p_less_pair(self, hyperplanes: HyperplaneSet, point: FinSupportPoint, h: int, k: int) -> FinSupportPoint:
		"""Replace (ξ(h), ξ(k)) by p^< of them; requires h < k. Preserves ξ(h) + ξ(k)."""
		if not hyperplanes.relations.less(h, k):
			raise NotLessError(f"hyperplane {h} is not below {k}")
		x, y = p_less(point.value(h), point.value(k))
		return point.replace({h: x, k: y})

	def project_op(self, hyperplanes: HyperplaneSet, point: FinSupportPoint, order: Optional[PairKey] = None) -> FinSupportPoint:
		"""Apply p^op at the least active opposite pair until none is active.

		Pairs are ordered by ids unless `order` supplies a sort key. Moves never
		reactivate a pair, so this is one pass over the active pairs in that order.

		Note: the result depends on the order ≺ when active opposite pairs overlap,
		i.e. one hyperplane lies in two of them. The centre-based star with
		ξ = {0: 1/2, 1: 1/3, 2: 1/4} gives {2: 1/12} in id order and {0: 5/12} in
		reverse. On pairwise disjoint pairs every order agrees.
		"""
		self._cube_space.check_component(hyperplanes, point)
		active = self.op_support(hyperplanes, point)
		remaining = len(active)
		while active:
			if remaining == 0:
				raise CubistInternalError(f"opposite support of {point.entries} did not shrink")
			pair = min(active, key=order) if order else active[0]
			point = self.p_op_pair(hyperplanes, point, *pair)
			active = self.op_support(hyperplanes, point)
			remaining -= 1
		return point

	def project_less(self, hyperplanes: HyperplaneSet, point: FinSupportPoint, tie: Optional[PairKey] = None) -> FinSupportPoint:
		"""Apply p^< at an active nested pair of largest carrier distance until none is active.

		Ties in carrier distance go to the smallest pair by ids unless `tie` supplies
		a sort key. The active set is recomputed after every move. Two crossing
		hyperplanes below a common one at equal carrier distance make the result
		depend on the tie-break.
		"""
		self._cube_space.check_component(hyperplanes, point)
		if self.op_support(hyperplanes, point):
			raise OpSupportNonemptyError("project_less needs a point without active opposite pairs; apply project_op first")

		active = self.less_support(hyperplanes, point)
		remaining = len(active)
		while active:
			if remaining == 0:
				raise CubistInternalError(f"nested support of {point.entries} did not shrink")
			farthest = max(hyperplanes.carrier_distance(h, k) for h, k in active)
			bucket = [pair for pair in active if hyperplanes.carrier_distance(*pair) == farthest]
			pair = min(bucket, key=tie) if tie else bucket[0]
			point = self.p_less_pair(hyperplanes, point, *pair)
			active = self.less_support(hyperplanes, point)
			remaining -= 1
		return point

	def retract(self, hyperplanes: HyperplaneSet, point: FinSupportPoint) -> FinSupportPoint:
		"""P = P^< ∘ P^op, staying in C(X)."""
		return self.project_less(hyperplanes, self.project_op(hyperplanes, point))

	def project(self, hyperplanes: HyperplaneSet, point: FinSupportPoint) -> CubePoint:
		"""P followed by decoding; a point P fails to decode is a bug.

		Usage: `projection.project(hs, FinSupportPoint.zero(0))` -> CubePoint(vertex=base)
		"""
		return self.decode_retracted(hyperplanes, self.retract(hyperplanes, point))

	def decode_retracted(self, hyperplanes: HyperplaneSet, point: FinSupportPoint) -> CubePoint:
		try:
			return self._cube_space.decode(hyperplanes, point)
		except NotInImageError as e:
			raise CubistInternalError(f"projected point {point.entries} is not in the image of ι: {e}") from e
