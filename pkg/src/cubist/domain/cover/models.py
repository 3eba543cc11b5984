from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict

from cubist.core.utils import fraction_to_str

Point = Tuple[Fraction, ...]


@dataclass(frozen=True)
class CellLocation:
	"""Position of a point of [0, 1]^n in the subdivisions T and T₁ of the cube.

	With x = 2y - 1, `signs` picks the orthant (ties at 0 go to -1) and `order`
	lists coordinates by decreasing |x|, ties by index. The T-simplex has
	vertices w_0 (the cube centre) and w_k, the centre of the face fixing the
	first k coordinates of `order` at their orthant's side; `t_weights` are the
	barycentric coordinates of the point in w_0..w_n. `chain` orders the
	w_k by decreasing weight, and the T₁-simplex vertex b_k is the barycentre of
	the first k+1 of them, with coordinates `bary`. b_k has level k.
	"""

	signs: Tuple[int, ...]
	order: Tuple[int, ...]
	t_weights: Tuple[Fraction, ...]
	chain: Tuple[int, ...]
	bary: Tuple[Fraction, ...]

	@property
	def dimension(self) -> int:
		return len(self.signs)

	@property
	def star_levels(self) -> List[int]:
		"""Levels of the T₁ vertices carrying the largest barycentric coordinate."""
		top = max(self.bary)
		return [k for k, value in enumerate(self.bary) if value == top]

	def t_vertex(self, k: int) -> Point:
		fixed = set(self.order[:k])
		return tuple(
			Fraction(1 if self.signs[i] > 0 else 0) if i in fixed else Fraction(1, 2) for i in range(self.dimension)
		)

	def t1_vertex(self, k: int) -> Point:
		return barycentre([self.t_vertex(c) for c in self.chain[: k + 1]])


class SimplexLocation(BaseModel):
	"""A cube point located in the T₁ subdivision of its carrying cube.

	`t_vertices` are ids of w_0..w_n in the complex, each written `corner/h.h`
	for the face with nearest corner `corner` spanned by the listed
	hyperplanes (just `corner` for a vertex). A T₁ vertex is the barycentre of a
	set of T-vertices and its id joins their ids with "+".
	"""

	model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

	vertex: int
	hyperplanes: Tuple[int, ...]
	orthant: Tuple[int, ...]
	perm_cell: Tuple[int, ...]
	t_vertices: Tuple[str, ...]
	t1_vertices: Tuple[str, ...]
	bary: Tuple[Fraction, ...]

	@property
	def t1_levels(self) -> Tuple[int, ...]:
		return tuple(range(len(self.t1_vertices)))

	def star_vertices(self) -> List[Tuple[int, str]]:
		"""(level, T₁ vertex id) for every argmax vertex of `bary`."""
		top = max(self.bary)
		return [(k, self.t1_vertices[k]) for k, value in enumerate(self.bary) if value == top]

	def to_json(self) -> Dict[str, Any]:
		return {
			"vertex": self.vertex,
			"hyperplanes": list(self.hyperplanes),
			"orthant": ["+" if s > 0 else "-" for s in self.orthant],
			"perm_cell": list(self.perm_cell),
			"t_vertices": list(self.t_vertices),
			"t1_vertices": list(self.t1_vertices),
			"bary": [fraction_to_str(q) for q in self.bary],
		}


@dataclass(frozen=True)
class StarPiece:
	"""The part of the T₂-star of a T₁ vertex inside one T₁-simplex of a model grid.

	It is the region where that vertex has the largest barycentric coordinate,
	the convex hull of the barycentres of the faces containing it.
	"""

	star: Point
	level: int
	vertices: Tuple[Point, ...]
	lower: Point
	upper: Point


class CoverComponent(BaseModel):
	model_config = ConfigDict(frozen=True)

	vertices: Tuple[int, ...]
	diameter: int
	star: str

	def to_json(self) -> Dict[str, Any]:
		return {"vertices": list(self.vertices), "diameter": self.diameter, "star": self.star}


class CoverLevel(BaseModel):
	model_config = ConfigDict(frozen=True)

	level: int
	vertices: Tuple[int, ...]
	components: Tuple[CoverComponent, ...]

	def to_json(self) -> Dict[str, Any]:
		return {
			"level": self.level,
			"vertices": list(self.vertices),
			"components": [component.to_json() for component in self.components],
		}


class CoverCertificate(BaseModel):
	"""The cover U_0..U_D of a complex with its r-components and star witnesses.

	`delta` is None when the complex has no cubes, so no two distinct stars
	exist; it is written "inf".
	"""

	model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

	r: Fraction
	delta: Optional[Fraction]
	epsilon: Fraction
	n: int
	dimension: int
	collapsed: bool
	levels: Tuple[CoverLevel, ...]
	max_diameter: int

	def to_json(self) -> Dict[str, Any]:
		return {
			"r": fraction_to_str(self.r),
			"delta": "inf" if self.delta is None else fraction_to_str(self.delta),
			"epsilon": fraction_to_str(self.epsilon),
			"N": self.n,
			"dimension": self.dimension,
			"collapsed": self.collapsed,
			"levels": [level.to_json() for level in self.levels],
			"max_diameter": self.max_diameter,
		}


class CertificateReport(BaseModel):
	model_config = ConfigDict(frozen=True)

	checks: Dict[str, bool]
	violations: Tuple[str, ...] = ()

	@property
	def ok(self) -> bool:
		return not self.violations

	def to_json(self) -> Dict[str, Any]:
		return {"ok": self.ok, "checks": dict(self.checks), "violations": list(self.violations)}


def barycentre(points: List[Point]) -> Point:
	"""Usage: `barycentre([(Fraction(0),), (Fraction(1, 2),)])` -> (Fraction(1, 4),)"""
	count = len(points)
	return tuple(sum(coordinates, Fraction(0)) / count for coordinates in zip(*points))
