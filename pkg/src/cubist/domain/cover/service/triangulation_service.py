from fractions import Fraction
from itertools import combinations, permutations, product
from typing import Iterable, Iterator, List, Optional, Sequence, Set, Tuple

from sympy import Matrix, Rational

from cubist.core.exceptions import CubistInternalError
from cubist.core.service.base_service import Service
from cubist.domain.cover.models import CellLocation, Point, SimplexLocation, StarPiece, barycentre
from cubist.domain.cube_space.models import CubePoint
from cubist.domain.hyperplanes.models import HyperplaneSet
from cubist.domain.median.models import members_mask

HALF = Fraction(1, 2)


class TriangulationService(Service):
	"""The subdivisions T, T₁ = bT and T₂ = bT₁ of cubes and their star levels.

	T cuts [-1, 1]^n along x_i = 0 and x_i = ±x_j and is carried to each cube by
	y = (x + 1) / 2. A point lies in the T₂-star of a T₁ vertex exactly when that
	vertex has the largest barycentric coordinate in the point's T₁-simplex, so
	stars are read off without building T₂. The explicit enumerations over grid
	models back the δ computation and serve as an independent check.
	Usage: `triangulation.star_levels(hs, cube_point)` -> [0, 1]
	"""

	async def handle(self, **kwargs) -> SimplexLocation:
		return self.locate(kwargs["hyperplanes"], kwargs["point"])

	def locate_coordinates(self, values: Sequence[Fraction]) -> CellLocation:
		"""Locate a point of [0, 1]^n.

		Usage: `service.locate_coordinates([Fraction(3, 16)]).bary` -> (1/4, 3/4)
		"""
		x = [2 * Fraction(y) - 1 for y in values]
		n = len(x)
		signs = tuple(1 if xi > 0 else -1 for xi in x)
		order = tuple(sorted(range(n), key=lambda i: (-abs(x[i]), i)))

		magnitudes = [abs(x[i]) for i in order] + [Fraction(0)]
		t_weights = (1 - magnitudes[0],) + tuple(magnitudes[k - 1] - magnitudes[k] for k in range(1, n + 1))

		chain = tuple(sorted(range(n + 1), key=lambda k: (-t_weights[k], k)))
		ordered = [t_weights[c] for c in chain] + [Fraction(0)]
		bary = tuple((k + 1) * (ordered[k] - ordered[k + 1]) for k in range(n + 1))
		return CellLocation(signs=signs, order=order, t_weights=t_weights, chain=chain, bary=bary)

	def star_levels_of_coordinates(self, values: Sequence[Fraction]) -> List[int]:
		"""Usage: `service.star_levels_of_coordinates([Fraction(1, 8)])` -> [0, 1]"""
		return self.locate_coordinates(values).star_levels

	def locate(self, hyperplanes: HyperplaneSet, point: CubePoint) -> SimplexLocation:
		"""Locate a cube point of the complex and name its T and T₁ vertices.

		The carrying cube is the one spanned by the point's fractional hyperplanes
		at its corner vertex.
		"""
		axes = tuple(sorted(point.frac))
		cell = self.locate_coordinates([point.frac[h] for h in axes])
		component = hyperplanes.graph.component_of(point.vertex)
		corner_signature = hyperplanes.signatures[point.vertex]

		t_vertices = []
		for k in range(len(axes) + 1):
			fixed = cell.order[:k]
			ones = members_mask(axes[i] for i in fixed if cell.signs[i] > 0)
			corner = hyperplanes.vertex_with_signature(component, corner_signature | ones)
			if corner is None:
				raise CubistInternalError(f"cube at {point.vertex} spanned by {list(axes)} is missing a corner")
			free = [axes[i] for i in range(len(axes)) if i not in fixed]
			t_vertices.append(face_id(corner, free))

		t1_vertices = tuple("+".join(sorted(t_vertices[c] for c in cell.chain[: k + 1])) for k in range(len(axes) + 1))
		return SimplexLocation(
			vertex=point.vertex,
			hyperplanes=axes,
			orthant=cell.signs,
			perm_cell=tuple(axes[i] for i in cell.order),
			t_vertices=tuple(t_vertices),
			t1_vertices=t1_vertices,
			bary=cell.bary,
		)

	def star_levels(self, hyperplanes: HyperplaneSet, point: CubePoint) -> List[int]:
		"""The levels ℓ with the point in S_ℓ; never empty.

		Usage: `service.star_levels(hs, CubePoint(vertex=0))` -> [0]
		"""
		return self.star_levels_of_coordinates([point.frac[h] for h in sorted(point.frac)])

	def star_vertices(self, hyperplanes: HyperplaneSet, point: CubePoint) -> List[Tuple[int, str]]:
		"""(level, T₁ vertex id) of every star containing the point."""
		return self.locate(hyperplanes, point).star_vertices()

	def t_simplices(
		self,
		dimension: int,
		extent: int,
		offsets: Optional[Iterable[Tuple[int, ...]]] = None,
		orthants: Optional[Iterable[Tuple[int, ...]]] = None,
		orders: Optional[Iterable[Tuple[int, ...]]] = None,
	) -> Iterator[Tuple[Point, ...]]:
		"""T-simplices w_0..w_n of the unit cubes of the grid [0, extent]^n.

		Offsets, orthants and coordinate orders default to all of them.
		"""
		offsets = list(offsets) if offsets is not None else list(product(range(extent), repeat=dimension))
		orthants = list(orthants) if orthants is not None else list(product((-1, 1), repeat=dimension))
		orders = list(orders) if orders is not None else list(permutations(range(dimension)))
		for offset in offsets:
			centre = tuple(Fraction(o) + HALF for o in offset)
			for signs in orthants:
				for order in orders:
					vertices = [centre]
					for i in order:
						step = list(vertices[-1])
						step[i] += HALF * signs[i]
						vertices.append(tuple(step))
					yield tuple(vertices)

	def t1_simplices(self, t_simplices: Iterable[Tuple[Point, ...]]) -> Iterator[Tuple[Point, ...]]:
		"""T₁-simplices b_0..b_n, b_k of level k, one per ordering of each T-simplex."""
		for vertices in t_simplices:
			for chain in permutations(range(len(vertices))):
				yield tuple(barycentre([vertices[c] for c in chain[: k + 1]]) for k in range(len(vertices)))

	def t2_simplices(self, t1_simplices: Iterable[Tuple[Point, ...]]) -> Iterator[Tuple[Tuple[Point, ...], Point, int]]:
		"""T₂-simplices with the T₁ vertex they start from and its level."""
		for vertices in t1_simplices:
			for chain in permutations(range(len(vertices))):
				corners = tuple(barycentre([vertices[c] for c in chain[: k + 1]]) for k in range(len(vertices)))
				yield corners, vertices[chain[0]], chain[0]

	def star_pieces(self, t1_simplices: Iterable[Tuple[Point, ...]]) -> List[StarPiece]:
		"""One piece per (T₁-simplex, vertex): the argmax region of that vertex."""
		pieces = []
		for vertices in t1_simplices:
			n = len(vertices)
			for i in range(n):
				others = [j for j in range(n) if j != i]
				corners = tuple(
					barycentre([vertices[j] for j in (i, *subset)])
					for size in range(n)
					for subset in combinations(others, size)
				)
				lower = tuple(min(c[d] for c in corners) for d in range(len(vertices[i])))
				upper = tuple(max(c[d] for c in corners) for d in range(len(vertices[i])))
				pieces.append(StarPiece(star=vertices[i], level=i, vertices=corners, lower=lower, upper=upper))
		return pieces

	def star_levels_by_enumeration(self, values: Sequence[Fraction]) -> List[int]:
		"""Star levels of a point of [0, 1]^n found by testing it against every T₂-simplex.

		Barycentric coordinates are solved exactly; the point is in a simplex when
		none is negative.
		"""
		point = tuple(Fraction(y) for y in values)
		n = len(point)
		if n == 0:
			return [0]

		levels: Set[int] = set()
		for corners, _, level in self.t2_simplices(self.t1_simplices(self.t_simplices(n, 1))):
			if level in levels or not _in_box(point, corners):
				continue
			system = Matrix([[_rational(c[d]) for c in corners] for d in range(n)] + [[1] * (n + 1)])
			weights = system.LUsolve(Matrix([_rational(q) for q in point] + [1]))
			if all(w >= 0 for w in weights):
				levels.add(level)
		return sorted(levels)


def face_id(corner: int, free: Sequence[int]) -> str:
	"""Id of a cube face from its nearest corner and spanning hyperplanes; a vertex is its own id.

	Usage: `face_id(4, [1, 3])` -> "4/1.3"
	"""
	if not free:
		return str(corner)
	return f"{corner}/{'.'.join(str(h) for h in free)}"


def _in_box(point: Point, corners: Sequence[Point]) -> bool:
	for d, q in enumerate(point):
		if q < min(c[d] for c in corners) or q > max(c[d] for c in corners):
			return False
	return True


def _rational(q: Fraction) -> Rational:
	return Rational(q.numerator, q.denominator)
