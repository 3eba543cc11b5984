from cubist.domain.cli.models import CommandResult, PipelineArgs
from cubist.domain.cli.service.command_registry import Command
from cubist.domain.duality.service.quotient_service import QuotientService
from cubist.domain.hyperplanes.service.hyperplane_service import HyperplaneService
from cubist.domain.instances.exceptions import InvalidParamsError
from cubist.domain.instances.service.instance_service import InstanceService


class QuotientCommand(Command):
	"""Usage: `cubist quotient --kind grid --n 3 --m 3 --hyperplanes 0,2`"""

	@property
	def name(self) -> str:
		return "quotient"

	@property
	def category(self) -> str:
		return "Duality"

	@property
	def description(self) -> str:
		return "Collapse every hyperplane outside --hyperplanes and emit the quotient graph"

	async def execute(self, args: PipelineArgs) -> CommandResult:
		if args.hyperplanes is None:
			raise InvalidParamsError("quotient needs --hyperplanes h1,h2,... (an empty list is allowed)")

		instances = await self.make(InstanceService)
		hyperplane_service = await self.make(HyperplaneService)
		quotient_service = await self.make(QuotientService)

		hyperplanes = hyperplane_service.compute_hyperplanes(instances.load(args))
		quotient = quotient_service.quotient(hyperplanes, args.hyperplanes)
		return CommandResult(
			payload=quotient.to_json(),
			dot=quotient_service.to_dot(quotient),
			message=f"{hyperplanes.graph.vertex_count} vertices -> {quotient.graph.vertex_count} classes",
		)
