from cubist.domain.cli.models import CommandResult, PipelineArgs
from cubist.domain.cli.service.command_registry import Command
from cubist.domain.cover.service.cover_service import CoverService
from cubist.domain.hyperplanes.service.hyperplane_service import HyperplaneService
from cubist.domain.instances.exceptions import InvalidParamsError
from cubist.domain.instances.service.instance_service import InstanceService


class CoverCommand(Command):
	"""Usage: `cubist cover --kind path --n 9 --r 1 --out cover.json`"""

	@property
	def name(self) -> str:
		return "cover"

	@property
	def category(self) -> str:
		return "Cover"

	@property
	def description(self) -> str:
		return "Build the cover U_0..U_D for radius --r and emit its certificate"

	async def execute(self, args: PipelineArgs) -> CommandResult:
		if args.r is None:
			raise InvalidParamsError("cover needs --r p/q")

		instances = await self.make(InstanceService)
		hyperplane_service = await self.make(HyperplaneService)
		cover_service = await self.make(CoverService)

		hyperplanes = hyperplane_service.compute_hyperplanes(instances.load(args))
		certificate = await cover_service.build_cover(hyperplanes, args.r, args.ell, args.threads)
		return CommandResult(
			payload=certificate.to_json(),
			message=f"{len(certificate.levels)} level(s), M = {certificate.max_diameter}",
		)
