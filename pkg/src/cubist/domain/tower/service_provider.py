from typing import List, Type

from cubist.core.service.base_service import Service
from cubist.core.service_provider import ServiceProvider
from cubist.domain.cli.service.command_registry import Command
from cubist.domain.tower.command.map_command import MapCommand
from cubist.domain.tower.service.tower_service import TowerService


class TowerServiceProvider(ServiceProvider):
	"""Quotient towers and the `map` subcommand."""

	def services(self) -> List[Type[Service]]:
		return [TowerService]

	def commands(self) -> List[Type[Command]]:
		return [MapCommand]
