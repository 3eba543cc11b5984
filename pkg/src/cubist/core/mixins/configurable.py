from typing import TYPE_CHECKING, Optional

from cubist.core.config.config import CubistConfig

if TYPE_CHECKING:
	from cubist.container import Container


class Configurable:
	"""Gives a service `self._config`, resolved from the container at boot."""

	container: Optional["Container"]
	_config: CubistConfig

	async def boot_configurable(self, **kwargs) -> None:
		self._config = await self.container.make(CubistConfig)  # pyright: ignore[reportOptionalMemberAccess]
		await self._configure_service()

	async def _configure_service(self) -> None:
		"""Override to derive service-specific settings from `self._config`."""
		pass
