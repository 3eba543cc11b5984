from cubist.core.exceptions import CubistInputException


class NotInImageError(CubistInputException):
	"""Raised when a point of C(X) is not the image of any cube point.

	`reason` names the failed reconstruction step: `no_vertex_for_ones`,
	`frac_not_crossing` or `no_cube_at_vertex`.
	Usage: `except NotInImageError as e: assert e.reason == "frac_not_crossing"`
	"""

	NO_VERTEX_FOR_ONES = "no_vertex_for_ones"
	FRAC_NOT_CROSSING = "frac_not_crossing"
	NO_CUBE_AT_VERTEX = "no_cube_at_vertex"

	def __init__(self, reason: str, detail: str):
		self.reason = reason
		super().__init__(f"{reason}: {detail}")


class ComponentMismatchError(CubistInputException):
	"""Raised when a point's support leaves its declared component.

	Usage: `raise ComponentMismatchError("hyperplane 7 lies in component 1, point in 0")`
	"""

	pass
