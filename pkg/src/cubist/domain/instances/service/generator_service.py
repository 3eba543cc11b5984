import random
from typing import Callable, Dict, List, Optional, Set, Tuple

import networkx as nx

from cubist.core.logging import log
from cubist.core.service.base_service import Service
from cubist.domain.duality.models import Pocset
from cubist.domain.duality.service.roller_service import RollerService
from cubist.domain.hyperplanes.models import Relation
from cubist.domain.instances.exceptions import InvalidParamsError
from cubist.domain.instances.models import InstanceSpec
from cubist.domain.median.exceptions import InvalidGraphError
from cubist.domain.median.models import MedianGraph, RawGraph
from cubist.domain.median.service.median_service import MedianService

# Parameter defaults per kind; None means the parameter is unused.
DEFAULT_PARAMS: Dict[str, Tuple[Optional[int], Optional[int]]] = {
	"grid": (3, 3),
	"path": (5, None),
	"tree": (3, 2),
	"hypercube_grid": (3, 3),
	"hypercube": (3, None),
	"staircase": (3, None),
	"strip_gluing": (4, 2),
	"random_pocset": (5, 1),
}


class GeneratorService(Service):
	"""Deterministic generators for the standard test complexes.

	Every generated graph is passed through `MedianService.validate_median`.
	Usage: `graph = generators.generate(InstanceSpec(kind="grid", n=3, m=3))`
	"""

	async def boot(self, **kwargs) -> None:
		self._median_service = await self.make(MedianService)
		self._roller = await self.make(RollerService)

	async def handle(self, **kwargs) -> MedianGraph:
		return self.generate(kwargs["spec"])

	def generate(self, spec: InstanceSpec) -> MedianGraph:
		"""Build and validate the requested instance.

		Usage: `generators.generate(InstanceSpec(kind="tree", n=3, m=2)).vertex_count` -> 15
		"""
		if spec.kind == "file":
			return self._median_service.validate_median(self.read_file(spec))
		if spec.kind == "random_pocset":
			return self.random_pocset(spec)

		default_n, default_m = DEFAULT_PARAMS[spec.kind]
		n = spec.n if spec.n is not None else default_n
		m = spec.m if spec.m is not None else default_m
		builders: Dict[str, Callable[..., RawGraph]] = {
			"grid": self.grid,
			"path": self.path,
			"tree": self.tree,
			"hypercube_grid": self.hypercube_grid,
			"hypercube": self.hypercube,
			"staircase": self.staircase,
			"strip_gluing": self.strip_gluing,
		}
		raw = builders[spec.kind](n, m)
		log.debug("generated {} with n={} m={}: {} vertices", spec.kind, n, m, raw.vertices)
		return self._median_service.validate_median(raw)

	def read_file(self, spec: InstanceSpec) -> RawGraph:
		if spec.file is None:
			raise InvalidParamsError("kind file needs --file")
		try:
			text = spec.file.read_text(encoding="utf-8")
		except OSError as e:
			raise InvalidParamsError(f"cannot read {spec.file}: {e}") from e
		try:
			return RawGraph.model_validate_json(text)
		except ValueError as e:
			raise InvalidGraphError(f"{spec.file} is not a graph file: {e}") from e

	def grid(self, n: int, m: Optional[int]) -> RawGraph:
		"""The n×m grid; vertex (i, j) has id i·m + j.

		Usage: `generators.grid(3, 3)` -> 9 vertices, 12 edges
		"""
		m = _require(m, "grid", "m", 1)
		_require(n, "grid", "n", 1)
		edges = []
		for i in range(n):
			for j in range(m):
				v = i * m + j
				if j + 1 < m:
					edges.append((v, v + 1))
				if i + 1 < n:
					edges.append((v, v + m))
		return RawGraph(vertices=n * m, edges=edges)

	def path(self, n: int, m: Optional[int] = None) -> RawGraph:
		"""P_n on n vertices 0 - 1 - ... - (n-1)."""
		_require(n, "path", "n", 1)
		return RawGraph(vertices=n, edges=[(i, i + 1) for i in range(n - 1)])

	def tree(self, n: int, m: Optional[int]) -> RawGraph:
		"""Balanced tree of depth n and arity m, root 0."""
		_require(n, "tree", "n", 0)
		arity = _require(m, "tree", "m", 1)
		return _from_networkx(nx.balanced_tree(arity, n))

	def hypercube_grid(self, n: int, m: Optional[int]) -> RawGraph:
		"""The grid [0, n-1]^m, vertices in lexicographic order of their coordinates."""
		_require(n, "hypercube_grid", "n", 1)
		dimension = _require(m, "hypercube_grid", "m", 1)
		return _from_networkx(nx.grid_graph(dim=[n] * dimension))

	def hypercube(self, n: int, m: Optional[int] = None) -> RawGraph:
		"""The n-cube, vertices in lexicographic order of their 0/1 coordinates."""
		_require(n, "hypercube", "n", 0)
		if n == 0:
			return RawGraph(vertices=1, edges=[])
		return _from_networkx(nx.hypercube_graph(n))

	def staircase(self, n: int, m: Optional[int] = None) -> RawGraph:
		"""Grid cells (i, j) with 0 ≤ j ≤ i ≤ n, vertices in lexicographic order."""
		_require(n, "staircase", "n", 0)
		cells = [(i, j) for i in range(n + 1) for j in range(i + 1)]
		index = {cell: v for v, cell in enumerate(cells)}
		edges = []
		for (i, j), v in index.items():
			for neighbour in ((i + 1, j), (i, j + 1)):
				if neighbour in index:
					edges.append((v, index[neighbour]))
		return RawGraph(vertices=len(cells), edges=edges)

	def strip_gluing(self, n: int, m: Optional[int]) -> RawGraph:
		"""Strips of squares hung from a common bottom path.

		Strip 0 has n squares, bottom vertices 0..n and top vertices n+1..2n+1.
		Strip s in 1..m-1 has n-s squares; its bottom row is identified with the
		bottom vertices s..n of strip 0 and its top row is new.
		Usage: `generators.strip_gluing(4, 2)` -> 14 vertices
		"""
		length = _require(n, "strip_gluing", "n", 1)
		strips = _require(m, "strip_gluing", "m", 1)
		if strips > length + 1:
			raise InvalidParamsError(f"strip_gluing needs m ≤ n + 1 strips, got n={length} m={strips}")

		edges: List[Tuple[int, int]] = []
		bottom = list(range(length + 1))
		top = list(range(length + 1, 2 * length + 2))
		next_vertex = 2 * length + 2
		edges.extend(_ladder(bottom, top))
		edges.extend((bottom[k], bottom[k + 1]) for k in range(length))

		for s in range(1, strips):
			rows = length - s + 1
			page_top = list(range(next_vertex, next_vertex + rows))
			next_vertex += rows
			edges.extend(_ladder(bottom[s:], page_top))

		return RawGraph(vertices=next_vertex, edges=edges)

	def random_pocset(self, spec: InstanceSpec) -> MedianGraph:
		"""Dual graph of a random pocset on n halfspaces.

		Each attempt draws a random DAG for `less` (an edge i -> j, i < j, with
		probability `instances.random_nesting`) and closes it transitively, then
		marks m random incomparable pairs opposite and closes upwards: when h and
		k are opposite, so is every pair above them. Attempts whose closure makes
		a halfspace opposite to itself or to a comparable one are dropped, as are
		pocsets with more than `instances.max_random_vertices` ultrafilters.
		Usage: `generators.random_pocset(InstanceSpec(kind="random_pocset", seed=7))`
		"""
		config = self._config.instances
		default_n, default_m = DEFAULT_PARAMS["random_pocset"]
		size = spec.n if spec.n is not None else default_n
		opposite_pairs = spec.m if spec.m is not None else default_m
		if size < 1:
			raise InvalidParamsError(f"random_pocset needs at least 1 halfspace, got {size}")

		rng = random.Random(spec.seed)
		for attempt in range(1, config.max_random_attempts + 1):
			relations = _sample_relations(rng, size, opposite_pairs, config.random_nesting)
			if relations is None:
				continue
			pocset = Pocset(size=size, relations=relations, order=tuple(range(size)), labels=tuple(range(size)))
			ultrafilters = self._roller.enumerate_ultrafilters(pocset, limit=config.max_random_vertices)
			if len(ultrafilters) <= config.max_random_vertices:
				log.debug("random pocset accepted on attempt {}: {} vertices", attempt, len(ultrafilters))
				return self._roller.dual_graph(ultrafilters)

		raise InvalidParamsError(
			f"no random pocset with at most {config.max_random_vertices} vertices in "
			f"{config.max_random_attempts} attempts (halfspaces={size}, opposite pairs={opposite_pairs}, seed={spec.seed})"
		)


def _require(value: Optional[int], kind: str, name: str, minimum: int) -> int:
	if value is None or value < minimum:
		raise InvalidParamsError(f"{kind} needs --{name} ≥ {minimum}, got {value}")
	return value


def _ladder(bottom: List[int], top: List[int]) -> List[Tuple[int, int]]:
	"""Rungs and top rail of a strip whose bottom rail already exists."""
	edges = [(b, t) for b, t in zip(bottom, top)]
	edges.extend((top[k], top[k + 1]) for k in range(len(top) - 1))
	return edges


def _from_networkx(graph: nx.Graph) -> RawGraph:
	order = sorted(graph.nodes)
	index = {node: v for v, node in enumerate(order)}
	return RawGraph(vertices=len(order), edges=[(index[u], index[v]) for u, v in graph.edges])


def _sample_relations(
	rng: random.Random, size: int, opposite_pairs: int, nesting: float
) -> Optional[Dict[Tuple[int, int], Relation]]:
	"""A random relation table over halfspaces 0..size-1, or None when the closure conflicts.

	Index order is a linear extension of `less`, so i < j whenever i lies below j.
	"""
	below: List[Set[int]] = [set() for _ in range(size)]
	for j in range(size):
		for i in range(j):
			if rng.random() < nesting:
				below[j] |= {i} | below[i]
	above: List[Set[int]] = [{j for j in range(size) if i in below[j]} for i in range(size)]

	def comparable(h: int, k: int) -> bool:
		return h in below[k] or k in below[h]

	incomparable = [(h, k) for h in range(size) for k in range(h + 1, size) if not comparable(h, k)]
	opposite: Set[Tuple[int, int]] = set()
	for h, k in rng.sample(incomparable, min(opposite_pairs, len(incomparable))):
		for a in {h} | above[h]:
			for b in {k} | above[k]:
				if a == b or comparable(a, b):
					return None
				opposite.add((min(a, b), max(a, b)))

	table: Dict[Tuple[int, int], Relation] = {}
	for h in range(size):
		for k in range(h + 1, size):
			if h in below[k]:
				table[(h, k)] = Relation.LESS
			elif (h, k) in opposite:
				table[(h, k)] = Relation.OPPOSITE
			else:
				table[(h, k)] = Relation.CROSS
	return table
