from pathlib import Path
from typing import AsyncGenerator, Callable, List, Optional, Tuple

import pytest
import pytest_asyncio

from cubist.bootstrap import bootstrap, shutdown
from cubist.container import Container
from cubist.core.config.config import CubistConfig
from cubist.domain.hyperplanes.models import HyperplaneSet
from cubist.domain.hyperplanes.service.hyperplane_service import HyperplaneService
from cubist.domain.instances.models import InstanceSpec
from cubist.domain.instances.service.generator_service import GeneratorService
from cubist.domain.median.models import MedianGraph, RawGraph
from cubist.domain.median.service.median_service import MedianService

TRIPOD_EDGES = [(0, 1), (1, 2), (1, 3)]


@pytest.fixture
def test_config(tmp_path: Path) -> CubistConfig:
	"""Configuration rooted in a temporary directory, with debug cross-checks on and no δ cache.

	Usage: `def test_something(test_config): ...`
	"""
	config = CubistConfig()
	config.project_root = tmp_path
	config.cubist_dir = tmp_path / ".cubist"
	config.cubist_cache_dir = tmp_path / ".cubist" / "cache"
	config.cover.cache_delta = False
	config.development.enable = True
	return config


@pytest_asyncio.fixture
async def test_container(test_config: CubistConfig) -> AsyncGenerator[Container, None]:
	"""A container with every domain provider registered and all commands booted.

	Usage: `async def test_something(test_container): service = await test_container.make(MyService)`
	"""
	container = await bootstrap(test_config, Container())
	yield container
	await shutdown(container)


@pytest_asyncio.fixture
async def median_of(test_container: Container) -> Callable[..., MedianGraph]:
	"""Factory validating a graph given by its vertex count and edges.

	Usage: `graph = median_of(3, [(0, 1), (1, 2)])`
	"""
	median_service = await test_container.make(MedianService)

	def _median_of(vertices: int, edges: List[Tuple[int, int]], base: Optional[dict] = None) -> MedianGraph:
		return median_service.validate_median(RawGraph(vertices=vertices, edges=edges, base=base))

	return _median_of


@pytest_asyncio.fixture
async def hyperplanes_of(test_container: Container) -> Callable[..., HyperplaneSet]:
	"""Factory building the hyperplanes of a generated instance or of a median graph.

	Usage: `hs = hyperplanes_of("grid", 3, 3)`
	Usage: `hs = hyperplanes_of(graph)`
	"""
	generators = await test_container.make(GeneratorService)
	hyperplane_service = await test_container.make(HyperplaneService)

	def _hyperplanes_of(kind, n: Optional[int] = None, m: Optional[int] = None, seed: int = 0) -> HyperplaneSet:
		if isinstance(kind, MedianGraph):
			return hyperplane_service.compute_hyperplanes(kind)
		return hyperplane_service.compute_hyperplanes(generators.generate(InstanceSpec(kind=kind, n=n, m=m, seed=seed)))

	return _hyperplanes_of


@pytest_asyncio.fixture
async def tripod(median_of) -> MedianGraph:
	"""Leaf 0 (the base), centre 1, leaves 2 and 3."""
	return median_of(4, TRIPOD_EDGES)
