from typing import Tuple

from cubist.core.exceptions import CubistInputException


class InvalidGraphError(CubistInputException):
	"""Raised when a raw graph is not a finite simple graph.

	Loops, endpoints outside 0..n-1 and base vertices outside their component
	are reported here before the median axiom is checked.
	Usage: `raise InvalidGraphError("edge (2, 2) is a loop")`
	"""

	pass


class NotMedianError(CubistInputException):
	"""Raised when some vertex triple has zero or several medians.

	Usage: `except NotMedianError as e: print(e.triple, e.median_count)`
	"""

	def __init__(self, triple: Tuple[int, int, int], median_count: int):
		self.triple = triple
		self.median_count = median_count
		super().__init__(f"triple {triple} has {median_count} medians; a median graph needs exactly one")


class DifferentComponentsError(CubistInputException):
	"""Raised when an operation needs vertices of a single component.

	Usage: `raise DifferentComponentsError((0, 7))`
	"""

	def __init__(self, vertices: Tuple[int, ...]):
		self.vertices = vertices
		super().__init__(f"vertices {list(vertices)} do not lie in one component")


class EmptySetError(CubistInputException):
	"""Raised when a vertex set argument is empty."""

	pass


class UnknownVertexError(CubistInputException):
	"""Raised when a vertex id is outside 0..n-1."""

	pass
