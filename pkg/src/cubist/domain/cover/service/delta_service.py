import json
from fractions import Fraction
from itertools import product
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import Eq, Rational, symbols
from sympy.solvers.simplex import lpmin

from cubist.core.exceptions import CubistInternalError
from cubist.core.logging import log
from cubist.core.service.base_service import Service
from cubist.core.utils import fraction_to_str, parse_fraction
from cubist.domain.cover.exceptions import DimensionTooLargeError
from cubist.domain.cover.models import Point, StarPiece
from cubist.domain.cover.service.triangulation_service import TriangulationService

# Side of the grid model [0, MODEL_EXTENT]^D searched around the first cube.
MODEL_EXTENT = 2

# Pieces farther than this from the first cube's orthant are not examined; every
# piece of the model within this distance lies inside the model.
SEARCH_RADIUS = Fraction(1, 2)

# Values checked by hand and by the sampled test in the suite. In the unit square
# the T₂ vertices (7/36, 1/18) and (7/36, 5/36) lie in the stars of the level 1
# vertices (1/4, 0) and (1/4, 1/4) and are 1/12 apart; no closer pair exists.
# The LP search for D = 2 runs for many minutes, so the pinned value is used
# unless `cover.recompute_delta` is set.
PINNED_DELTAS: Dict[int, Fraction] = {2: Fraction(1, 12)}

_computed: Dict[int, Fraction] = {}


class DeltaService(Service):
	"""The star separation constant δ(D): the least ℓ¹ distance between distinct
	T₂-stars of T₁ vertices of the same level, in cube complexes of dimension D.

	The distance is minimised over pairs of star pieces in the grid model
	[0, 2]^D. Up to the symmetries of the grid the first piece lies in the
	orthant [1/2, 1]^D of the first cube with coordinates in decreasing order.
	Pairs are screened by bounding boxes against the best distance so far and
	the rest are solved exactly as linear programs.
	Usage: `delta_service.compute_delta(1)` -> Fraction(1, 4)
	"""

	async def boot(self, **kwargs) -> None:
		self._triangulation = await self.make(TriangulationService)

	async def handle(self, **kwargs) -> Optional[Fraction]:
		return self.compute_delta(kwargs["dimension"])

	def compute_delta(self, dimension: int) -> Optional[Fraction]:
		"""δ(D), or None for D = 0 where no two distinct stars exist."""
		if dimension < 0:
			raise ValueError(f"dimension must be a natural number, got {dimension}")
		maximum = self._config.cover.max_dimension
		if dimension > maximum:
			raise DimensionTooLargeError(f"dimension {dimension} exceeds the configured maximum {maximum}")
		if dimension == 0:
			return None

		if self._config.cover.recompute_delta:
			return self._search(dimension)
		if dimension in PINNED_DELTAS:
			return PINNED_DELTAS[dimension]
		if dimension not in _computed:
			cached = self._read_cache().get(dimension)
			if cached is None:
				cached = self._search(dimension)
				self._write_cache(dimension, cached)
			_computed[dimension] = cached
		return _computed[dimension]

	def separation_constant(self, dimension: int) -> Optional[Fraction]:
		"""min δ(d) over 1 ≤ d ≤ D, usable for every component of dimension at most D."""
		values = [self.compute_delta(d) for d in range(1, dimension + 1)]
		return min((v for v in values if v is not None), default=None)

	def polytope_distance(self, first: Sequence[Point], second: Sequence[Point]) -> Fraction:
		"""Exact ℓ¹ distance between the convex hulls of two point sets.

		Usage: `service.polytope_distance([(0,), (1,)], [(3,), (4,)])` -> 2
		"""
		dimension = len(first[0])
		lam = symbols(f"a0:{len(first)}", real=True)
		mu = symbols(f"b0:{len(second)}", real=True)
		gap = symbols(f"t0:{dimension}", real=True)

		constraints = [v >= 0 for v in (*lam, *mu)]
		constraints += [Eq(sum(lam), 1), Eq(sum(mu), 1)]
		for d in range(dimension):
			offset = sum(w * _rational(p[d]) for w, p in zip(lam, first)) - sum(w * _rational(q[d]) for w, q in zip(mu, second))
			constraints += [gap[d] - offset >= 0, gap[d] + offset >= 0]

		value, _ = lpmin(sum(gap), constraints)
		return Fraction(int(value.p), int(value.q))

	def _search(self, dimension: int) -> Fraction:
		triangulation = self._triangulation
		first = triangulation.star_pieces(
			triangulation.t1_simplices(
				triangulation.t_simplices(
					dimension,
					MODEL_EXTENT,
					offsets=[(0,) * dimension],
					orthants=[(1,) * dimension],
					orders=[tuple(range(dimension))],
				)
			)
		)
		second = triangulation.star_pieces(triangulation.t1_simplices(triangulation.t_simplices(dimension, MODEL_EXTENT)))

		candidates: List[Tuple[Fraction, StarPiece, StarPiece]] = []
		for a in first:
			for b in second:
				if a.level != b.level or a.star == b.star:
					continue
				gap = _box_gap(a, b)
				if gap < SEARCH_RADIUS:
					candidates.append((gap, a, b))

		if not candidates:
			raise CubistInternalError(f"no same-level star pieces within {SEARCH_RADIUS} of each other for D = {dimension}")
		best = min(_corner_distance(a, b) for _, a, b in candidates)
		candidates.sort(key=lambda item: item[0])
		solved = 0
		for gap, a, b in candidates:
			if gap >= best:
				break
			best = min(best, self.polytope_distance(a.vertices, b.vertices))
			solved += 1

		log.info(
			"δ({}) = {} from {} candidate piece pairs, {} solved exactly",
			dimension,
			fraction_to_str(best),
			len(candidates),
			solved,
		)
		return best

	def _cache_file(self) -> Path:
		return self._config.cubist_cache_dir / "delta.json"

	def _read_cache(self) -> Dict[int, Fraction]:
		if not self._config.cover.cache_delta or not self._cache_file().exists():
			return {}
		try:
			raw = json.loads(self._cache_file().read_text(encoding="utf-8"))
			return {int(d): parse_fraction(value) for d, value in raw.items()}
		except (ValueError, AttributeError) as e:
			log.warning("ignoring unreadable δ cache {}: {}", self._cache_file(), e)
			return {}

	def _write_cache(self, dimension: int, value: Fraction) -> None:
		if not self._config.cover.cache_delta:
			return
		values = self._read_cache()
		values[dimension] = value
		path = self._cache_file()
		path.parent.mkdir(parents=True, exist_ok=True)
		payload = {str(d): fraction_to_str(v) for d, v in sorted(values.items())}
		path.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="utf-8")


def _box_gap(a: StarPiece, b: StarPiece) -> Fraction:
	"""ℓ¹ distance between the bounding boxes, a lower bound for the pieces."""
	total = Fraction(0)
	for d in range(len(a.lower)):
		total += max(Fraction(0), b.lower[d] - a.upper[d], a.lower[d] - b.upper[d])
	return total


def _corner_distance(a: StarPiece, b: StarPiece) -> Fraction:
	"""Least ℓ¹ distance between corners, an upper bound for the pieces."""
	return min(sum((abs(p - q) for p, q in zip(x, y)), Fraction(0)) for x, y in product(a.vertices, b.vertices))


def _rational(q: Fraction) -> Rational:
	return Rational(q.numerator, q.denominator)
