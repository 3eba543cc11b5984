from typing import List, Type

from cubist.core.service.base_service import Service
from cubist.core.service_provider import ServiceProvider
from cubist.domain.cli.service.artifact_service import ArtifactService
from cubist.domain.cli.service.console_service import ConsoleService


class CLIServiceProvider(ServiceProvider):
	"""Console output and artifact writing."""

	def services(self) -> List[Type[Service]]:
		return [ConsoleService, ArtifactService]
