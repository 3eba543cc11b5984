from cubist.domain.cli.models import CommandResult, PipelineArgs
from cubist.domain.cli.service.command_registry import Command
from cubist.domain.coloring.service.coloring_service import ColoringService
from cubist.domain.hyperplanes.service.hyperplane_service import HyperplaneService
from cubist.domain.instances.service.instance_service import InstanceService


class ColorCommand(Command):
	"""Usage: `cubist color --kind path --n 5` -> colours 1, 0, 1, 0"""

	@property
	def name(self) -> str:
		return "color"

	@property
	def category(self) -> str:
		return "Tower"

	@property
	def description(self) -> str:
		return "Compute rank vectors, predecessors and the hyperplane 2-coloring"

	async def execute(self, args: PipelineArgs) -> CommandResult:
		instances = await self.make(InstanceService)
		hyperplane_service = await self.make(HyperplaneService)
		coloring_service = await self.make(ColoringService)

		hyperplanes = hyperplane_service.compute_hyperplanes(instances.load(args))
		coloring = coloring_service.compute_coloring(hyperplanes)
		payload = {
			"colors": coloring.rows(),
			"color": list(coloring.color),
			"k_c": coloring.k_c,
			"dimension": list(coloring.dimension),
		}
		return CommandResult(payload=payload, message=f"|K_c| = {len(coloring.k_c)} of {len(hyperplanes)}")
