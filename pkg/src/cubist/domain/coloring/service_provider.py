from typing import List, Type

from cubist.core.service.base_service import Service
from cubist.core.service_provider import ServiceProvider
from cubist.domain.cli.service.command_registry import Command
from cubist.domain.coloring.command.color_command import ColorCommand
from cubist.domain.coloring.service.coloring_service import ColoringService


class ColoringServiceProvider(ServiceProvider):
	"""Rank vectors and the 2-coloring the tower quotients by."""

	def services(self) -> List[Type[Service]]:
		return [ColoringService]

	def commands(self) -> List[Type[Command]]:
		return [ColorCommand]
