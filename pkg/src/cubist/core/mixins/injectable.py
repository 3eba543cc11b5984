from typing import TYPE_CHECKING, Optional, Type, TypeVar

from cubist.core.exceptions import CubistInternalError

if TYPE_CHECKING:
	from cubist.container import Container

T = TypeVar("T")


class Injectable:
	"""Resolves collaborators through the container the instance was built by.

	Commands and services call `make` from `boot` or `execute`; a detached
	instance has no container and fails loudly instead of reaching for the
	global `app`.
	"""

	container: Optional["Container"]

	async def make(self, service_class: Type[T]) -> T:
		"""Usage: `cube_space = await self.make(CubeSpaceService)`"""
		if self.container is None:
			raise CubistInternalError(
				f"{type(self).__name__} was created outside a container and cannot resolve {service_class.__name__}"
			)
		return await self.container.make(service_class)
