from cubist.domain.cli.models import CommandResult, PipelineArgs
from cubist.domain.cli.service.command_registry import Command
from cubist.domain.cover.service.certificate_service import CertificateService
from cubist.domain.cover.service.cover_service import CoverService
from cubist.domain.hyperplanes.service.hyperplane_service import HyperplaneService
from cubist.domain.instances.exceptions import InvalidParamsError
from cubist.domain.instances.service.instance_service import InstanceService


class CertifyCommand(Command):
	"""Build a cover, then re-verify every certificate invariant from scratch.

	A failed check raises CubistPropertyViolation, which the CLI reports with exit code 2.
	Usage: `cubist certify --kind grid --n 6 --m 6 --r 2`
	"""

	@property
	def name(self) -> str:
		return "certify"

	@property
	def category(self) -> str:
		return "Cover"

	@property
	def description(self) -> str:
		return "Build the cover for --r and independently re-check its certificate"

	async def execute(self, args: PipelineArgs) -> CommandResult:
		if args.r is None:
			raise InvalidParamsError("certify needs --r p/q")

		instances = await self.make(InstanceService)
		hyperplane_service = await self.make(HyperplaneService)
		cover_service = await self.make(CoverService)
		certificates = await self.make(CertificateService)

		hyperplanes = hyperplane_service.compute_hyperplanes(instances.load(args))
		certificate = await cover_service.build_cover(hyperplanes, args.r, args.ell, args.threads)
		report = certificates.certify(hyperplanes, certificate, args.ell)
		return CommandResult(
			payload={**certificate.to_json(), "verification": report.to_json()},
			message="certificate verified",
		)
