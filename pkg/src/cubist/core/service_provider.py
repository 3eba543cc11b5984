from abc import ABC
from typing import List, Type

from cubist.container import Container
from cubist.core.service.base_service import Service
from cubist.domain.cli.service.command_registry import Command, CommandRegistry


class ServiceProvider(ABC):
	"""Base class of the per-domain providers.

	A provider lists the services and pipeline commands of its domain. The
	bootstrap registers every provider's bindings first and boots commands
	afterwards, so commands may resolve services from any domain.
	"""

	def services(self) -> List[Type[Service]]:
		"""Service classes registered as container singletons."""
		return []

	def commands(self) -> List[Type[Command]]:
		"""Pipeline commands registered with the CommandRegistry."""
		return []

	async def register_services(self, container: Container):
		for service_class in self.services():
			container.singleton(service_class)

	async def register_commands(self, container: Container):
		for command_class in self.commands():
			container.bind(command_class)

	async def boot_commands(self, container: Container):
		commands = self.commands()
		if not commands:
			return

		command_registry = await container.make(CommandRegistry)
		for command_class in commands:
			command = await container.make(command_class)
			command_registry.register_command(command)

	async def register(self, container: Container):
		"""Phase 1 hook for bindings that are not plain singletons."""
		pass

	async def boot(self, container: Container):
		"""Phase 2 hook, run once every provider has registered."""
		pass

	async def shutdown(self, container: Container):
		"""Release resources at the end of a run, in reverse provider order."""
		pass
