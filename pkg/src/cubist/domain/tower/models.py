from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict

from cubist.core.utils import fraction_to_str
from cubist.domain.coloring.models import ColoringAssignment
from cubist.domain.duality.models import QuotientResult
from cubist.domain.hyperplanes.models import HyperplaneSet
from cubist.domain.interpolation.models import WeightFn


class TowerStage(BaseModel):
	"""One coloring → quotient by K_c → Ψ_w → P step."""

	model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

	index: int
	source: HyperplaneSet
	coloring: ColoringAssignment
	quotient: QuotientResult
	weights: WeightFn

	@property
	def target(self) -> HyperplaneSet:
		return self.quotient.hyperplanes

	@property
	def constant(self) -> Fraction:
		return self.weights.constant

	def to_json(self) -> Dict[str, Any]:
		return {
			"stage": self.index,
			"vertices": self.source.graph.vertex_count,
			"hyperplanes": len(self.source),
			"k_c": list(self.coloring.k_c),
			"ell": list(self.weights.ell),
			"constant": fraction_to_str(self.constant),
			"quotient_vertices": self.quotient.graph.vertex_count,
		}


class TowerMap(BaseModel):
	"""The composite map f from a complex to the last quotient of its tower.

	`constant_product` multiplies the stage constants. A collapsed tower ends in
	a complex without hyperplanes, so f is constant on every component.
	"""

	model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

	epsilon: Fraction
	stages: Tuple[TowerStage, ...]
	constant_product: Fraction
	collapsed: bool = False
	notes: Tuple[str, ...] = ()

	@property
	def n(self) -> int:
		return len(self.stages)

	@property
	def source(self) -> HyperplaneSet:
		return self.stages[0].source

	@property
	def target(self) -> HyperplaneSet:
		return self.stages[-1].target

	@property
	def lipschitz_bound(self) -> Fraction:
		return Fraction(0) if self.collapsed else self.constant_product

	def to_json(self) -> Dict[str, Any]:
		return {
			"epsilon": fraction_to_str(self.epsilon),
			"N": self.n,
			"constant_product": fraction_to_str(self.constant_product),
			"lipschitz_bound": fraction_to_str(self.lipschitz_bound),
			"collapsed": self.collapsed,
			"notes": list(self.notes),
			"stages": [stage.to_json() for stage in self.stages],
		}


class LipschitzReport(BaseModel):
	model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

	observed: Fraction
	bound: Fraction
	ok: bool
	worst_pair: Optional[Tuple[int, int]] = None

	def to_json(self) -> Dict[str, Any]:
		return {
			"observed": fraction_to_str(self.observed),
			"bound": fraction_to_str(self.bound),
			"ok": self.ok,
			"worst_pair": list(self.worst_pair) if self.worst_pair else None,
		}


class CobornologyReport(BaseModel):
	"""Control table: for each t, the least image distance over pairs at source distance ≥ t."""

	model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

	control: List[Tuple[int, Fraction]]

	def to_json(self) -> Dict[str, Any]:
		return {"control": [[t, fraction_to_str(value)] for t, value in self.control]}
