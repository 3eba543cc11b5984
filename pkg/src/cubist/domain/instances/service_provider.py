from typing import List, Type

from cubist.core.service.base_service import Service
from cubist.core.service_provider import ServiceProvider
from cubist.domain.instances.service.generator_service import GeneratorService
from cubist.domain.instances.service.graph_io_service import GraphIOService
from cubist.domain.instances.service.instance_service import InstanceService


class InstancesServiceProvider(ServiceProvider):
	"""Instance generators and graph file handling used by every subcommand."""

	def services(self) -> List[Type[Service]]:
		return [GeneratorService, GraphIOService, InstanceService]
