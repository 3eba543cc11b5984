from functools import cached_property
from typing import Any, Dict, List, Tuple

from pydantic import BaseModel, ConfigDict

from cubist.domain.hyperplanes.models import HyperplaneSet, Relation
from cubist.domain.median.models import MedianGraph, members_mask


class QuotientResult(BaseModel):
	"""The quotient X_K of a median graph by a hyperplane subset K.

	Vertices are the classes of equal K-sides; `vertex_map` sends each original
	vertex to its class and `hyperplane_map` sends each h ∈ K to the quotient
	hyperplane it induces.
	"""

	model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

	kept: Tuple[int, ...]
	graph: MedianGraph
	hyperplanes: HyperplaneSet
	vertex_map: Tuple[int, ...]
	hyperplane_map: Dict[int, int]

	@cached_property
	def classes(self) -> List[List[int]]:
		grouped: List[List[int]] = [[] for _ in range(self.graph.vertex_count)]
		for v, image in enumerate(self.vertex_map):
			grouped[image].append(v)
		return grouped

	def to_json(self) -> Dict[str, Any]:
		return {
			"kept": list(self.kept),
			"graph": self.graph.to_raw().model_dump(),
			"vertex_map": list(self.vertex_map),
			"classes": self.classes,
			"hyperplane_map": {str(h): q for h, q in sorted(self.hyperplane_map.items())},
		}


class Pocset(BaseModel):
	"""A finite pocset given by its pairwise relation table.

	Halfspaces are indexed 0..size-1 and oriented so that the base point lies on
	every minus side. `relations` holds (h, k) with h < k by index; `order` is the
	backtracking order, and `labels` maps indices back to hyperplane ids when the
	pocset comes from a HyperplaneSet.
	"""

	model_config = ConfigDict(frozen=True)

	size: int
	relations: Dict[Tuple[int, int], Relation]
	order: Tuple[int, ...]
	labels: Tuple[int, ...]

	def relation(self, h: int, k: int) -> Relation:
		if h == k:
			return Relation.EQUAL
		if h < k:
			return self.relations[(h, k)]
		return _CONVERSE[self.relations[(k, h)]]

	@cached_property
	def forbidden(self) -> Tuple[Tuple[Tuple[int, int], Tuple[int, int]], ...]:
		"""Per index h, for each side of h, masks of the k whose (minus, plus) side becomes impossible.

		`forbidden[h][side]` is `(no_minus_mask, no_plus_mask)`, side 0 minus and 1 plus.
		Opposite pairs exclude (plus, plus); h < k excludes (minus at h, plus at k).
		"""
		table = []
		for h in range(self.size):
			if_minus = [0, 0]
			if_plus = [0, 0]
			for k in range(self.size):
				relation = self.relation(h, k)
				if relation is Relation.OPPOSITE:
					if_plus[1] |= 1 << k
				elif relation is Relation.LESS:
					if_minus[1] |= 1 << k
				elif relation is Relation.GREATER:
					if_plus[0] |= 1 << k
			table.append(((if_minus[0], if_minus[1]), (if_plus[0], if_plus[1])))
		return tuple(table)


class Ultrafilter(BaseModel):
	"""A consistent choice of side for every halfspace of a pocset.

	`plus_mask` has bit i set when the ultrafilter picks the plus side of index i.
	"""

	model_config = ConfigDict(frozen=True)

	size: int
	plus_mask: int

	def side(self, i: int) -> str:
		return "plus" if self.plus_mask >> i & 1 else "minus"

	def sides(self) -> List[str]:
		return [self.side(i) for i in range(self.size)]

	@classmethod
	def from_plus(cls, size: int, plus: List[int]) -> "Ultrafilter":
		return cls(size=size, plus_mask=members_mask(plus))


_CONVERSE = {
	Relation.LESS: Relation.GREATER,
	Relation.GREATER: Relation.LESS,
	Relation.OPPOSITE: Relation.OPPOSITE,
	Relation.CROSS: Relation.CROSS,
	Relation.EQUAL: Relation.EQUAL,
	Relation.DIFFERENT_COMPONENT: Relation.DIFFERENT_COMPONENT,
}
