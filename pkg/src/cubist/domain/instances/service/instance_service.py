from cubist.core.logging import log
from cubist.core.service.base_service import Service
from cubist.domain.cli.models import PipelineArgs
from cubist.domain.instances.exceptions import InvalidParamsError
from cubist.domain.instances.models import InstanceSpec
from cubist.domain.instances.service.generator_service import GeneratorService
from cubist.domain.median.models import MedianGraph, RawGraph
from cubist.domain.median.service.median_service import MedianService


class InstanceService(Service):
	"""Turns the shared command-line options into a validated median graph.

	Usage: `graph = instances.load(args)`
	"""

	async def boot(self, **kwargs) -> None:
		self._generators = await self.make(GeneratorService)
		self._median_service = await self.make(MedianService)

	async def handle(self, **kwargs) -> MedianGraph:
		return self.load(kwargs["args"])

	def spec_from_args(self, args: PipelineArgs) -> InstanceSpec:
		kind = args.kind or ("file" if args.file is not None else None)
		if kind is None:
			raise InvalidParamsError("give an instance with --kind or --file")
		if kind == "file" and args.file is None:
			raise InvalidParamsError("--kind file needs --file")
		try:
			return InstanceSpec(kind=kind, n=args.n, m=args.m, seed=args.seed, file=args.file)  # pyright: ignore[reportArgumentType]
		except ValueError as e:
			raise InvalidParamsError(f"invalid instance {kind!r}: {e}") from e

	def load(self, args: PipelineArgs) -> MedianGraph:
		"""Generate or read the instance, then apply `--base` to its component.

		Usage: `instances.load(PipelineArgs(kind="path", n=5, base=2)).base` -> (2,)
		"""
		graph = self._generators.generate(self.spec_from_args(args))
		if args.base is None:
			return graph

		self._median_service.require_vertices(graph, args.base)
		bases = dict(enumerate(graph.base))
		bases[graph.component_of(args.base)] = args.base
		log.debug("rebasing component {} at vertex {}", graph.component_of(args.base), args.base)
		return self._median_service.validate_median(
			RawGraph(vertices=graph.vertex_count, edges=list(graph.edges), base=bases)
		)
