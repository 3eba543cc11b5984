from itertools import combinations
from typing import Dict, List, Optional, Set

from networkx.utils import UnionFind

from cubist.core.exceptions import CubistPropertyViolation
from cubist.core.logging import log
from cubist.core.service.base_service import Service
from cubist.core.utils import fraction_to_str
from cubist.domain.cover.models import CertificateReport, CoverCertificate
from cubist.domain.cover.service.cover_service import cover_epsilon
from cubist.domain.cover.service.delta_service import DeltaService
from cubist.domain.cover.service.triangulation_service import TriangulationService
from cubist.domain.cube_space.service.cube_space_service import CubeSpaceService
from cubist.domain.hyperplanes.models import HyperplaneSet
from cubist.domain.hyperplanes.service.hyperplane_service import HyperplaneService
from cubist.domain.tower.exceptions import BudgetExceededError
from cubist.domain.tower.service.tower_service import TowerService


class CertificateService(Service):
	"""Re-verifies a cover certificate from scratch.

	The tower, every image, its stars and the r-components are recomputed
	sequentially, independently of the run that produced the certificate.
	Usage: `report = certificates.certify(hs, certificate)`
	"""

	async def boot(self, **kwargs) -> None:
		self._hyperplane_service = await self.make(HyperplaneService)
		self._delta_service = await self.make(DeltaService)
		self._tower_service = await self.make(TowerService)
		self._cube_space = await self.make(CubeSpaceService)
		self._triangulation = await self.make(TriangulationService)

	async def handle(self, **kwargs) -> CertificateReport:
		return self.certify(kwargs["hyperplanes"], kwargs["certificate"])

	def certify(
		self, hyperplanes: HyperplaneSet, certificate: CoverCertificate, ell: Optional[int] = None
	) -> CertificateReport:
		"""Check every certificate invariant and raise CubistPropertyViolation listing all failures.

		Checked: the parameters, that the U_ℓ cover every vertex and match the
		recomputed level sets, the r-components with their diameters and M, the
		star witnesses, and that vertices in distinct same-level stars are at
		distance at least r + 1.
		"""
		graph = hyperplanes.graph
		violations: List[str] = []
		checks: Dict[str, bool] = {}

		def check(name: str, failures: List[str]) -> None:
			checks[name] = not failures
			violations.extend(f"{name}: {failure}" for failure in failures)

		dimension = self._hyperplane_service.dimension(hyperplanes)
		delta = self._delta_service.separation_constant(dimension)
		epsilon = cover_epsilon(delta, certificate.r)
		tower = self._tower_service.build_tower(hyperplanes, epsilon, ell)
		parameters = []
		if (certificate.dimension, certificate.delta, certificate.epsilon) != (dimension, delta, epsilon):
			parameters.append("dimension, δ or ε differ from the recomputed values")
		if certificate.n != tower.n:
			parameters.append(f"N is {certificate.n}, recomputed {tower.n}")
		check("parameters", parameters)

		target = tower.target
		stars: List[Dict[int, Set[str]]] = []
		for x in range(graph.vertex_count):
			image = self._cube_space.decode(target, self._tower_service.apply(tower, x))
			by_level: Dict[int, Set[str]] = {}
			for level, star in self._triangulation.star_vertices(target, image):
				by_level.setdefault(level, set()).add(star)
			stars.append(by_level)

		covered = set().union(*(level.vertices for level in certificate.levels))
		check("coverage", [f"vertex {x} lies in no U_ℓ" for x in range(graph.vertex_count) if x not in covered])

		level_failures = []
		for level in certificate.levels:
			expected = [x for x in range(graph.vertex_count) if level.level in stars[x]]
			if list(level.vertices) != expected:
				level_failures.append(f"U_{level.level} is {list(level.vertices)}, recomputed {expected}")
		check("levels", level_failures)

		component_failures = []
		witness_failures = []
		for level in certificate.levels:
			expected_groups = self._components(hyperplanes, list(level.vertices), certificate)
			reported = sorted(sorted(c.vertices) for c in level.components)
			if reported != expected_groups:
				component_failures.append(f"r-components of U_{level.level} differ from the recomputed ones")
			for component in level.components:
				diameter = max((int(graph.distance(x, y)) for x, y in combinations(component.vertices, 2)), default=0)
				if diameter != component.diameter or diameter > certificate.max_diameter:
					component_failures.append(f"component {list(component.vertices)} has diameter {diameter}")
				for x in component.vertices:
					if component.star not in stars[x].get(level.level, set()):
						witness_failures.append(f"vertex {x} is not in the star of {component.star}")
		reported_max = max((c.diameter for lv in certificate.levels for c in lv.components), default=0)
		if reported_max != certificate.max_diameter:
			component_failures.append(f"M is {certificate.max_diameter}, largest diameter {reported_max}")
		check("components", component_failures)
		check("witnesses", witness_failures)

		separation_failures = []
		for level in certificate.levels:
			for x, y in combinations(level.vertices, 2):
				apart = stars[x].get(level.level, set()).isdisjoint(stars[y].get(level.level, set()))
				if apart and graph.distance(x, y) < certificate.r + 1:
					separation_failures.append(f"vertices {x}, {y} in distinct level {level.level} stars are too close")
		check("separation", separation_failures)

		try:
			lipschitz = self._tower_service.verify_lipschitz(tower)
			failures = []
			if not lipschitz.ok:
				observed, bound = fraction_to_str(lipschitz.observed), fraction_to_str(lipschitz.bound)
				failures.append(f"observed {observed} above bound {bound}")
			check("lipschitz", failures)
		except BudgetExceededError as e:
			log.warning("skipping the Lipschitz check: {}", e)

		report = CertificateReport(checks=checks, violations=tuple(violations))
		if not report.ok:
			raise CubistPropertyViolation("certificate rejected:\n" + "\n".join(violations))
		log.info("certificate verified: {}", ", ".join(sorted(checks)))
		return report

	def _components(self, hyperplanes: HyperplaneSet, members: List[int], certificate: CoverCertificate) -> List[List[int]]:
		graph = hyperplanes.graph
		classes = UnionFind(members)
		for x, y in combinations(members, 2):
			if graph.distance(x, y) <= certificate.r:
				classes.union(x, y)
		return sorted(sorted(group) for group in classes.to_sets())
