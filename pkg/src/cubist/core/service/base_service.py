from abc import ABC
from typing import Any

from cubist.core.mixins.bootable import Bootable
from cubist.core.mixins.configurable import Configurable
from cubist.core.mixins.injectable import Injectable


class Service(ABC, Bootable, Configurable, Injectable):
	"""Base class of every domain service.

	Algorithmic methods on services are synchronous and free of shared mutable
	state, so a booted service may be used from worker threads. The async
	surface (`boot`, `validate`, `__call__`) exists for container wiring.
	"""

	async def validate(self) -> bool:
		"""Check the service can run with the current configuration.

		Usage: `await service.validate()`
		"""
		return True

	async def __call__(self, **kwargs) -> Any:
		"""Validate, then run the service's primary operation.

		Usage: `graph = await median_service(raw=raw_graph)`
		"""
		await self.validate()
		return await self.handle(**kwargs)

	async def handle(self, **kwargs) -> Any:
		"""Primary operation of the service; concrete services document their kwargs."""
		pass
