from functools import cached_property
from typing import Any, Dict, List, Tuple

from pydantic import BaseModel, ConfigDict

from cubist.domain.median.models import members_mask

Rank = Tuple[int, ...]


class ColoringAssignment(BaseModel):
	"""Rank vectors, predecessors and the 2-coloring of a hyperplane set.

	All tuples are indexed by hyperplane id; `dimension` is indexed by component.
	`k_c` lists the hyperplanes of colour 0, the set the tower quotients by.
	"""

	model_config = ConfigDict(frozen=True)

	rank: Tuple[Rank, ...]
	color: Tuple[int, ...]
	predecessors: Tuple[Tuple[int, ...], ...]
	r_maximal: Tuple[Tuple[int, ...], ...]
	dimension: Tuple[int, ...]

	@cached_property
	def k_c(self) -> List[int]:
		return [h for h, c in enumerate(self.color) if c == 0]

	@cached_property
	def k_c_mask(self) -> int:
		return members_mask(self.k_c)

	@cached_property
	def ones_mask(self) -> int:
		"""Bitmask of the hyperplanes of colour 1."""
		return members_mask(h for h, c in enumerate(self.color) if c == 1)

	def rows(self) -> List[Dict[str, Any]]:
		return [
			{
				"hyperplane": h,
				"rank": list(self.rank[h]),
				"color": self.color[h],
				"predecessors": list(self.predecessors[h]),
				"r_maximal": list(self.r_maximal[h]),
			}
			for h in range(len(self.color))
		]
