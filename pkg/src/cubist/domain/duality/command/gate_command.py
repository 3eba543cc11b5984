from cubist.domain.cli.models import CommandResult, PipelineArgs
from cubist.domain.cli.service.command_registry import Command
from cubist.domain.duality.service.roller_service import RollerService
from cubist.domain.hyperplanes.service.hyperplane_service import HyperplaneService
from cubist.domain.instances.exceptions import InvalidParamsError
from cubist.domain.instances.service.instance_service import InstanceService
from cubist.domain.median.service.median_service import MedianService


class GateCommand(Command):
	"""Gate of --base onto the convex set --set.

	Without --base the origin is the base vertex of the component of the first
	set member.
	Usage: `cubist gate --kind hypercube --n 2 --base 0 --set 1,3` -> gate 1
	"""

	@property
	def name(self) -> str:
		return "gate"

	@property
	def category(self) -> str:
		return "Duality"

	@property
	def description(self) -> str:
		return "Nearest point of a convex vertex set to an origin"

	async def execute(self, args: PipelineArgs) -> CommandResult:
		if not args.set:
			raise InvalidParamsError("gate needs --set v1,v2,...")

		instances = await self.make(InstanceService)
		hyperplane_service = await self.make(HyperplaneService)
		median_service = await self.make(MedianService)
		roller = await self.make(RollerService)

		hyperplanes = hyperplane_service.compute_hyperplanes(instances.load(args))
		graph = hyperplanes.graph
		median_service.require_vertices(graph, *args.set)
		origin = args.base if args.base is not None else graph.base_of(args.set[0])
		gate = roller.gate(hyperplanes, origin, args.set)
		payload = {
			"origin": origin,
			"set": sorted(set(args.set)),
			"gate": gate,
			"distance": int(graph.distance(origin, gate)),
		}
		return CommandResult(payload=payload, message=f"gate of {origin} onto {payload['set']} is {gate}")
