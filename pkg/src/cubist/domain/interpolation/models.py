from fractions import Fraction
from functools import cached_property
from typing import Dict, Tuple

from pydantic import BaseModel, ConfigDict

from cubist.domain.coloring.models import ColoringAssignment
from cubist.domain.hyperplanes.models import HyperplaneSet


class WeightFn(BaseModel):
	"""The weights w(k, h) of the interpolation map, with one ℓ per component.

	w(h, h) = ℓ/(ℓ+1); w(k, h) = 1/(ℓ+1) when k < h, c(h) = 1 and every j with
	k < j < h has c(j) = 0; every other weight is 0.
	"""

	model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

	hyperplanes: HyperplaneSet
	coloring: ColoringAssignment
	ell: Tuple[int, ...]

	def ell_of(self, h: int) -> int:
		return self.ell[self.hyperplanes.component[h]]

	@cached_property
	def memo(self) -> Dict[Tuple[int, int], Fraction]:
		return {}

	@property
	def constant(self) -> Fraction:
		"""Worst ℓ/(ℓ+1) over the components that have hyperplanes; 1/2 when there are none."""
		ells = [self.ell[c] for c, members in enumerate(self.hyperplanes.component_hyperplanes) if members]
		worst = max(ells, default=1)
		return Fraction(worst, worst + 1)
