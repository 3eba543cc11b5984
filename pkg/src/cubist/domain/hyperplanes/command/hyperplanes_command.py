from cubist.domain.cli.models import CommandResult, PipelineArgs
from cubist.domain.cli.service.command_registry import Command
from cubist.domain.hyperplanes.service.hyperplane_service import HyperplaneService
from cubist.domain.instances.service.graph_io_service import GraphIOService
from cubist.domain.instances.service.instance_service import InstanceService


class HyperplanesCommand(Command):
	"""Usage: `cubist hyperplanes --kind grid --n 3 --m 3 --format dot`"""

	@property
	def name(self) -> str:
		return "hyperplanes"

	@property
	def category(self) -> str:
		return "Median graphs"

	@property
	def description(self) -> str:
		return "List hyperplanes, their halfspaces and the relation table"

	async def execute(self, args: PipelineArgs) -> CommandResult:
		instances = await self.make(InstanceService)
		hyperplane_service = await self.make(HyperplaneService)
		graph_io = await self.make(GraphIOService)

		graph = instances.load(args)
		hyperplanes = hyperplane_service.compute_hyperplanes(graph)
		return CommandResult(
			payload=hyperplane_service.to_json(hyperplanes),
			dot=graph_io.to_dot(graph, hyperplanes),
			message=f"{len(hyperplanes)} hyperplane(s), dimension {hyperplane_service.dimension(hyperplanes)}",
		)
