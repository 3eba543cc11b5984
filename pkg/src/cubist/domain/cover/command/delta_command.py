from cubist.core.utils import fraction_to_str
from cubist.domain.cli.models import CommandResult, PipelineArgs
from cubist.domain.cli.service.command_registry import Command
from cubist.domain.cover.service.delta_service import DeltaService
from cubist.domain.instances.exceptions import InvalidParamsError


class DeltaCommand(Command):
	"""Usage: `cubist delta --dimension 2`"""

	@property
	def name(self) -> str:
		return "delta"

	@property
	def category(self) -> str:
		return "Cover"

	@property
	def description(self) -> str:
		return "Compute the star separation constant δ for --dimension"

	async def execute(self, args: PipelineArgs) -> CommandResult:
		if args.dimension is None:
			raise InvalidParamsError("delta needs --dimension")

		delta_service = await self.make(DeltaService)
		delta = delta_service.compute_delta(args.dimension)
		separation = delta_service.separation_constant(args.dimension)
		payload = {
			"dimension": args.dimension,
			"delta": "inf" if delta is None else fraction_to_str(delta),
			"separation_constant": "inf" if separation is None else fraction_to_str(separation),
		}
		return CommandResult(payload=payload, message=f"δ({args.dimension}) = {payload['delta']}")
