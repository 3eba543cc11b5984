from typing import List, Type

from cubist.core.service.base_service import Service
from cubist.core.service_provider import ServiceProvider
from cubist.domain.interpolation.service.interpolation_service import InterpolationService


class InterpolationServiceProvider(ServiceProvider):
	def services(self) -> List[Type[Service]]:
		return [InterpolationService]
