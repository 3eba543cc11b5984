from typing import List, Type

from cubist.core.service.base_service import Service
from cubist.core.service_provider import ServiceProvider
from cubist.domain.cube_space.service.cube_space_service import CubeSpaceService


class CubeSpaceServiceProvider(ServiceProvider):
	def services(self) -> List[Type[Service]]:
		return [CubeSpaceService]
