import asyncio
from typing import Any, Callable, Dict, Optional, Type, TypeVar

from cubist.core.mixins.bootable import Bootable

T = TypeVar("T")


class Container:
	"""Dependency injection container holding the pipeline's services.

	Singletons are created lazily on first `make` and booted once; transient
	bindings produce a fresh booted instance per resolution. Pre-built objects
	such as the loaded configuration are registered with `instance`.
	"""

	def __init__(self):
		self._singletons: Dict[Type, Callable[[], Any]] = {}
		self._transients: Dict[Type, Callable[[], Any]] = {}
		self._instances: Dict[Type, Any] = {}
		self._service_providers = []

	def bind(self, service_class: Type[T], concrete: Optional[Callable[[], T]] = None) -> None:
		"""Register a transient binding.

		Usage: `container.bind(ValidateCommand)`
		"""
		self._transients[service_class] = concrete or self._default_factory(service_class)

	def singleton(self, service_class: Type[T], concrete: Optional[Callable[[], T]] = None) -> None:
		"""Register a singleton binding.

		Usage: `container.singleton(HyperplaneService)`
		Usage: `container.singleton(CubistConfig, lambda: config)`
		"""
		self._singletons[service_class] = concrete or self._default_factory(service_class)

	def instance(self, service_class: Type[T], value: T) -> None:
		"""Register an already constructed object; it is never booted by the container.

		Usage: `container.instance(CubistConfig, config)`
		"""
		self._instances[service_class] = value

	def has(self, service_class: Type) -> bool:
		return service_class in self._instances or service_class in self._singletons or service_class in self._transients

	async def make(self, service_class: Type[T], **kwargs) -> T:
		"""Resolve a service from the container.

		Usage: `median_service = await container.make(MedianService)`
		"""
		if service_class in self._instances:
			return self._instances[service_class]

		if service_class in self._singletons:
			instance = await self._create_instance(self._singletons[service_class], **kwargs)
			self._instances[service_class] = instance
			return instance

		if service_class in self._transients:
			return await self._create_instance(self._transients[service_class], **kwargs)

		raise ValueError(f"No binding found for {service_class.__name__}")

	def _default_factory(self, service_class: Type[T]) -> Callable[[], T]:
		def concrete():
			return service_class(self)  # pyright: ignore[reportCallIssue]

		return concrete

	async def _create_instance(self, factory: Callable, **kwargs) -> Any:
		if asyncio.iscoroutinefunction(factory):
			instance = await factory()
		else:
			instance = factory()

		if isinstance(instance, Bootable):
			await instance.ensure_booted(**kwargs)

		return instance


app = Container()
