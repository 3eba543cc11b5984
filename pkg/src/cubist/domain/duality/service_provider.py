from typing import List, Type

from cubist.core.service.base_service import Service
from cubist.core.service_provider import ServiceProvider
from cubist.domain.cli.service.command_registry import Command
from cubist.domain.duality.command.gate_command import GateCommand
from cubist.domain.duality.command.quotient_command import QuotientCommand
from cubist.domain.duality.command.roller_command import RollerCommand
from cubist.domain.duality.service.quotient_service import QuotientService
from cubist.domain.duality.service.roller_service import RollerService


class DualityServiceProvider(ServiceProvider):
	"""Quotients, pocset duality and gates."""

	def services(self) -> List[Type[Service]]:
		return [QuotientService, RollerService]

	def commands(self) -> List[Type[Command]]:
		return [QuotientCommand, RollerCommand, GateCommand]
