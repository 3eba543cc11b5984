from cubist.container import Container
from cubist.core.config.config import CubistConfig
from cubist.domain.cli.service.command_registry import CommandRegistry
from cubist.domain.cli.service.console_service import ConsoleService
from cubist.domain.cli.service_provider import CLIServiceProvider
from cubist.domain.coloring.service_provider import ColoringServiceProvider
from cubist.domain.cover.service_provider import CoverServiceProvider
from cubist.domain.cube_space.service_provider import CubeSpaceServiceProvider
from cubist.domain.duality.service_provider import DualityServiceProvider
from cubist.domain.hyperplanes.service_provider import HyperplanesServiceProvider
from cubist.domain.instances.service_provider import InstancesServiceProvider
from cubist.domain.interpolation.service_provider import InterpolationServiceProvider
from cubist.domain.median.service_provider import MedianServiceProvider
from cubist.domain.projection.service_provider import ProjectionServiceProvider
from cubist.domain.tower.service_provider import TowerServiceProvider


async def bootstrap(config: CubistConfig, container: Container) -> Container:
	"""Register every domain in the container and boot the pipeline commands.

	Bindings are registered for all providers before any command is booted, so
	a command may resolve services from any domain.
	"""
	container.singleton(CommandRegistry)
	container.instance(CubistConfig, config)
	container.singleton(ConsoleService)

	service_providers = [
		CLIServiceProvider(),
		MedianServiceProvider(),
		HyperplanesServiceProvider(),
		InstancesServiceProvider(),
		DualityServiceProvider(),
		ColoringServiceProvider(),
		CubeSpaceServiceProvider(),
		InterpolationServiceProvider(),
		ProjectionServiceProvider(),
		TowerServiceProvider(),
		CoverServiceProvider(),
	]

	# Phase 1: bindings
	for provider in service_providers:
		await provider.register_services(container)
		await provider.register_commands(container)
		await provider.register(container)

	# Phase 2: commands and provider hooks
	for provider in service_providers:
		await provider.boot_commands(container)
		await provider.boot(container)

	container._service_providers = service_providers
	return container


async def shutdown(container: Container) -> None:
	"""Shut providers down in reverse boot order."""
	for provider in reversed(container._service_providers):
		await provider.shutdown(container)
