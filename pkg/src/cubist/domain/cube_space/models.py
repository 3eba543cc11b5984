from fractions import Fraction
from typing import Any, Dict, List, Mapping

from pydantic import BaseModel, ConfigDict, field_validator

from cubist.core.utils import fraction_to_str, parse_fraction
from cubist.domain.median.models import members_mask


def _coordinates(value: Any, open_interval: bool) -> Dict[int, Fraction]:
	cleaned: Dict[int, Fraction] = {}
	for key, raw in dict(value).items():
		q = parse_fraction(raw)
		if open_interval and not 0 < q < 1:
			raise ValueError(f"fractional coordinate of hyperplane {key} must lie in (0, 1), got {q}")
		if not 0 <= q <= 1:
			raise ValueError(f"coordinate of hyperplane {key} must lie in [0, 1], got {q}")
		if q:
			cleaned[int(key)] = q
	return dict(sorted(cleaned.items()))


class FinSupportPoint(BaseModel):
	"""A finitely supported map from the hyperplanes of one component to [0, 1].

	Only non-zero coordinates are stored, so two points are equal exactly when
	their entries are. Values are exact rationals.
	Usage: `FinSupportPoint(component=0, entries={1: Fraction(1, 2)})`
	"""

	model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

	component: int
	entries: Dict[int, Fraction] = {}

	@field_validator("entries", mode="before")
	@classmethod
	def _normalise(cls, value: Any) -> Dict[int, Fraction]:
		return _coordinates(value, open_interval=False)

	@classmethod
	def zero(cls, component: int) -> "FinSupportPoint":
		return cls(component=component, entries={})

	def value(self, h: int) -> Fraction:
		return self.entries.get(h, Fraction(0))

	@property
	def support(self) -> List[int]:
		return list(self.entries)

	@property
	def support_mask(self) -> int:
		return members_mask(self.entries)

	def replace(self, updates: Mapping[int, Fraction]) -> "FinSupportPoint":
		"""Copy with some coordinates overwritten; zeros drop out of the support.

		Usage: `point.replace({h: Fraction(0), k: Fraction(1, 3)})`
		"""
		return FinSupportPoint(component=self.component, entries={**self.entries, **updates})

	def to_json(self) -> Dict[str, Any]:
		return {
			"component": self.component,
			"entries": {str(h): fraction_to_str(q) for h, q in self.entries.items()},
		}

	@classmethod
	def from_json(cls, payload: Mapping[str, Any]) -> "FinSupportPoint":
		return cls(component=int(payload["component"]), entries=payload.get("entries", {}))


class CubePoint(BaseModel):
	"""A point of the cube realization: a corner vertex and fractional coordinates.

	`vertex` is the corner of the carrying cube nearest the component base and
	`frac` holds the coordinates in (0, 1) along the cube's hyperplanes, which
	pairwise cross. A vertex of the graph has empty `frac`.
	"""

	model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

	vertex: int
	frac: Dict[int, Fraction] = {}

	@field_validator("frac", mode="before")
	@classmethod
	def _normalise(cls, value: Any) -> Dict[int, Fraction]:
		return _coordinates(value, open_interval=True)

	@property
	def hyperplanes(self) -> List[int]:
		return list(self.frac)

	@property
	def is_vertex(self) -> bool:
		return not self.frac

	def to_json(self) -> Dict[str, Any]:
		return {
			"vertex": self.vertex,
			"frac": {str(h): fraction_to_str(q) for h, q in self.frac.items()},
		}
