from typing import Any, Dict, Tuple

from pydantic import BaseModel, ConfigDict

Pair = Tuple[int, int]


class PairSupport(BaseModel):
	"""Pairs of hyperplanes on which the elementary moves still act.

	`op_pairs` are the opposite pairs with both coordinates non-zero;
	`less_pairs` are the (h, k), h < k, with ξ(h) ≠ 1 and ξ(k) ≠ 0.
	"""

	model_config = ConfigDict(frozen=True)

	op_pairs: Tuple[Pair, ...] = ()
	less_pairs: Tuple[Pair, ...] = ()

	@property
	def is_empty(self) -> bool:
		return not self.op_pairs and not self.less_pairs

	def to_json(self) -> Dict[str, Any]:
		return {"op": [list(pair) for pair in self.op_pairs], "less": [list(pair) for pair in self.less_pairs]}
