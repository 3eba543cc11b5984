import asyncio
from typing import Any, Dict

from pydantic import ValidationError

from cubist.bootstrap import bootstrap, shutdown
from cubist.container import Container
from cubist.core.config.config import CubistConfig
from cubist.core.exceptions import CubistException, CubistInputException
from cubist.core.logging import log
from cubist.domain.cli.models import PipelineArgs
from cubist.domain.cli.service.artifact_service import ArtifactService
from cubist.domain.cli.service.command_registry import CommandRegistry
from cubist.domain.cli.service.console_service import ConsoleService


class Cubist:
	"""Runs one pipeline subcommand against a booted container and reports the outcome."""

	def __init__(self, container: Container):
		self.container = container

	async def run(self, name: str, options: Dict[str, Any]) -> int:
		"""Dispatch `name` and return the process exit code.

		Domain exceptions are shown as error panels with their own exit code;
		anything else is a bug and exits with 3.
		"""
		console = await self.container.make(ConsoleService)
		try:
			args = PipelineArgs(**options)
			command = (await self.container.make(CommandRegistry)).get_command(name)
			if command is None:
				raise CubistInputException(f"unknown subcommand {name!r}")

			if args.threads is None:
				args.threads = (await self.container.make(CubistConfig)).cli.threads
			log.info("running {} with {}", name, args.model_dump(exclude_none=True))
			result = await command.execute(args)
			(await self.container.make(ArtifactService)).write(result, args)
		except ValidationError as e:
			log.warning("invalid options for {}: {}", name, e)
			console.print_error_panel(str(e), title="Invalid options")
			return CubistInputException.exit_code
		except CubistException as e:
			log.exception(e)
			console.print_error_panel(str(e), title=type(e).__name__)
			return e.exit_code
		except Exception as e:
			log.exception(e)
			console.print_error_panel(str(e), title="Internal error")
			return 3

		if result.message:
			if result.exit_code == 0:
				console.print_success(result.message)
			else:
				console.print_warning(result.message)
		return result.exit_code


async def main(config: CubistConfig, name: str, options: Dict[str, Any]) -> int:
	"""Application entry point for a single subcommand."""
	container = await bootstrap(config, Container())
	try:
		return await Cubist(container).run(name, options)
	finally:
		await shutdown(container)


def run(config: CubistConfig, name: str, options: Dict[str, Any]) -> int:
	return asyncio.run(main(config, name, options))
