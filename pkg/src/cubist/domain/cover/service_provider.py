from typing import List, Type

from cubist.core.service.base_service import Service
from cubist.core.service_provider import ServiceProvider
from cubist.domain.cli.service.command_registry import Command
from cubist.domain.cover.command.certify_command import CertifyCommand
from cubist.domain.cover.command.cover_command import CoverCommand
from cubist.domain.cover.command.delta_command import DeltaCommand
from cubist.domain.cover.service.certificate_service import CertificateService
from cubist.domain.cover.service.cover_service import CoverService
from cubist.domain.cover.service.delta_service import DeltaService
from cubist.domain.cover.service.triangulation_service import TriangulationService


class CoverServiceProvider(ServiceProvider):
	"""Triangulations, the star separation constant and asymptotic-dimension covers.

	Registers the `cover`, `certify` and `delta` subcommands.
	"""

	def services(self) -> List[Type[Service]]:
		return [TriangulationService, DeltaService, CoverService, CertificateService]

	def commands(self) -> List[Type[Command]]:
		return [CoverCommand, CertifyCommand, DeltaCommand]
