from typing import List, Type

from cubist.core.service.base_service import Service
from cubist.core.service_provider import ServiceProvider
from cubist.domain.cli.service.command_registry import Command
from cubist.domain.hyperplanes.command.hyperplanes_command import HyperplanesCommand
from cubist.domain.hyperplanes.service.hyperplane_service import HyperplaneService


class HyperplanesServiceProvider(ServiceProvider):
	def services(self) -> List[Type[Service]]:
		return [HyperplaneService]

	def commands(self) -> List[Type[Command]]:
		return [HyperplanesCommand]
