from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from cubist.core.utils import parse_fraction, parse_id_list


class PipelineArgs(BaseModel):
	"""Options shared by every pipeline subcommand, parsed from the click layer."""

	model_config = ConfigDict(arbitrary_types_allowed=True)

	kind: Optional[str] = Field(default=None, description="Generator kind (grid, path, tree, ...)")
	n: Optional[int] = Field(default=None, ge=0)
	m: Optional[int] = Field(default=None, ge=0)
	seed: int = Field(default=0, ge=0, lt=2**64)
	file: Optional[Path] = None
	base: Optional[int] = Field(default=None, ge=0, description="Base vertex of its component; also the gate origin")
	epsilon: Optional[Fraction] = None
	ell: Optional[int] = Field(default=None, ge=1)
	r: Optional[Fraction] = None
	threads: Optional[int] = Field(default=None, ge=1)
	out: Optional[Path] = None
	format: Literal["json", "dot"] = "json"
	set: Optional[List[int]] = Field(default=None, description="Vertex set for gate")
	hyperplanes: Optional[List[int]] = Field(default=None, description="Hyperplane subset for quotient")
	dimension: Optional[int] = Field(default=None, ge=0)

	@field_validator("epsilon", "r", mode="before")
	@classmethod
	def _parse_rational(cls, value: Any) -> Any:
		if value is None:
			return None
		return parse_fraction(value)

	@field_validator("set", "hyperplanes", mode="before")
	@classmethod
	def _parse_ids(cls, value: Any) -> Any:
		if isinstance(value, str):
			return parse_id_list(value)
		return value


class CommandResult(BaseModel):
	"""Artifact produced by a pipeline command.

	`payload` is rendered as JSON unless `--format dot` is requested and the
	command supplied `dot`. `exit_code` is non-zero when the artifact itself
	documents a failure (e.g. a NotMedian counterexample).
	"""

	payload: Dict[str, Any]
	dot: Optional[str] = None
	exit_code: int = 0
	message: Optional[str] = None
