from typing import List, Type

from cubist.core.service.base_service import Service
from cubist.core.service_provider import ServiceProvider
from cubist.domain.projection.service.projection_service import ProjectionService


class ProjectionServiceProvider(ServiceProvider):
	def services(self) -> List[Type[Service]]:
		return [ProjectionService]
