from abc import ABC, abstractmethod
from typing import Dict, List, Optional

from cubist.core.mixins.bootable import Bootable
from cubist.core.mixins.configurable import Configurable
from cubist.core.mixins.injectable import Injectable
from cubist.core.service.base_service import Service
from cubist.domain.cli.models import CommandResult, PipelineArgs


class Command(ABC, Bootable, Injectable, Configurable):
	"""Base class of the pipeline subcommands.

	Usage: `class ColorCommand(Command): ...` then list it in a provider's commands()
	"""

	@property
	@abstractmethod
	def name(self) -> str:
		"""Subcommand name, e.g. "color"."""
		pass

	@property
	def category(self) -> str:
		"""Group heading used in the command reference."""
		return "General"

	@property
	@abstractmethod
	def description(self) -> str:
		"""One line help text shown by `cubist --help`."""
		pass

	@abstractmethod
	async def execute(self, args: PipelineArgs) -> CommandResult:
		"""Run the subcommand and return its artifact.

		Domain exceptions propagate; the CLI maps them to exit codes.
		"""
		pass


class CommandRegistry(Service):
	"""Registry of pipeline commands, keyed by subcommand name."""

	async def boot(self, **kwargs):
		self._commands: Dict[str, Command] = {}

	def register_command(self, command: Command) -> None:
		"""Usage: `registry.register_command(await container.make(ValidateCommand))`"""
		self._commands[command.name] = command

	def get_command(self, name: str) -> Optional[Command]:
		return self._commands.get(name)

	def names(self) -> List[str]:
		return sorted(self._commands)
