from pathlib import Path
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

InstanceKind = Literal[
	"grid",
	"path",
	"tree",
	"hypercube_grid",
	"hypercube",
	"staircase",
	"strip_gluing",
	"random_pocset",
	"file",
]


class InstanceSpec(BaseModel):
	"""A request for a test complex.

	The meaning of `n` and `m` depends on the kind:
	grid n×m; path P_n; tree of depth n and arity m; hypercube_grid with side n in
	dimension m; hypercube of dimension n; staircase of size n; strip_gluing with
	strip length n and m strips; random_pocset with n halfspaces and m seeded opposite pairs.
	"""

	model_config = ConfigDict(frozen=True)

	kind: InstanceKind
	n: Optional[int] = Field(default=None, ge=0)
	m: Optional[int] = Field(default=None, ge=0)
	seed: int = Field(default=0, ge=0, lt=2**64)
	file: Optional[Path] = None
