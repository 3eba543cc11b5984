from cubist.core.logging import log
from cubist.domain.cli.models import CommandResult, PipelineArgs
from cubist.domain.cli.service.command_registry import Command
from cubist.domain.hyperplanes.service.hyperplane_service import HyperplaneService
from cubist.domain.instances.exceptions import InvalidParamsError
from cubist.domain.instances.service.instance_service import InstanceService
from cubist.domain.tower.exceptions import BudgetExceededError
from cubist.domain.tower.service.tower_service import TowerService


class MapCommand(Command):
	"""Build the quotient tower for --epsilon and report f with its verification.

	Usage: `cubist map --kind grid --n 6 --m 6 --epsilon 1`
	"""

	@property
	def name(self) -> str:
		return "map"

	@property
	def category(self) -> str:
		return "Tower"

	@property
	def description(self) -> str:
		return "Build the ε-Lipschitz quotient tower and emit per-vertex images with verification reports"

	async def execute(self, args: PipelineArgs) -> CommandResult:
		if args.epsilon is None:
			raise InvalidParamsError("map needs --epsilon p/q")

		instances = await self.make(InstanceService)
		hyperplane_service = await self.make(HyperplaneService)
		tower_service = await self.make(TowerService)

		hyperplanes = hyperplane_service.compute_hyperplanes(instances.load(args))
		tower = tower_service.build_tower(hyperplanes, args.epsilon, args.ell)
		images = await tower_service.apply_all(tower, args.threads)

		payload = {
			"tower": tower.to_json(),
			"images": {str(x): image.to_json() for x, image in enumerate(images)},
		}
		exit_code = 0
		try:
			lipschitz = tower_service.verify_lipschitz(tower, images)
			payload["lipschitz"] = lipschitz.to_json()
			payload["cobornology"] = tower_service.verify_cobornologous(tower, images).to_json()
			if not lipschitz.ok:
				exit_code = 2
		except BudgetExceededError as e:
			log.warning("skipping verification: {}", e)
			payload["lipschitz"] = {"skipped": str(e)}
			payload["cobornology"] = {"skipped": str(e)}

		message = f"{tower.n} stage(s), Lipschitz bound {payload['tower']['lipschitz_bound']}"
		return CommandResult(payload=payload, exit_code=exit_code, message=message)
