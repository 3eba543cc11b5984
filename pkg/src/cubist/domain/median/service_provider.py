from typing import List, Type

from cubist.core.service.base_service import Service
from cubist.core.service_provider import ServiceProvider
from cubist.domain.cli.service.command_registry import Command
from cubist.domain.median.command.validate_command import ValidateCommand
from cubist.domain.median.service.median_service import MedianService


class MedianServiceProvider(ServiceProvider):
	"""Median graph validation and metric queries, plus the `validate` subcommand."""

	def services(self) -> List[Type[Service]]:
		return [MedianService]

	def commands(self) -> List[Type[Command]]:
		return [ValidateCommand]
