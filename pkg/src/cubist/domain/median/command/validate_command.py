from cubist.domain.cli.models import CommandResult, PipelineArgs
from cubist.domain.cli.service.command_registry import Command
from cubist.domain.instances.service.graph_io_service import GraphIOService
from cubist.domain.instances.service.instance_service import InstanceService
from cubist.domain.median.exceptions import NotMedianError


class ValidateCommand(Command):
	"""Check the median axiom on an instance.

	A failing graph yields an artifact naming the offending triple and exit code 1.
	Usage: `cubist validate --file fivecycle.json`
	"""

	@property
	def name(self) -> str:
		return "validate"

	@property
	def category(self) -> str:
		return "Median graphs"

	@property
	def description(self) -> str:
		return "Validate that an instance is a median graph"

	async def execute(self, args: PipelineArgs) -> CommandResult:
		instances = await self.make(InstanceService)
		graph_io = await self.make(GraphIOService)

		try:
			graph = instances.load(args)
		except NotMedianError as e:
			return CommandResult(
				payload={"median": False, "triple": list(e.triple), "median_count": e.median_count},
				exit_code=e.exit_code,
				message=str(e),
			)

		payload = {
			"median": True,
			"graph": graph_io.to_json(graph),
			"components": [sorted(component) for component in graph.components],
		}
		return CommandResult(
			payload=payload,
			dot=graph_io.to_dot(graph),
			message=f"median graph with {graph.vertex_count} vertices and {len(graph.components)} component(s)",
		)
