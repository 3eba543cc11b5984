from cubist.core.exceptions import CubistInputException


class NotOppositeError(CubistInputException):
	"""Raised when p^op is applied to a pair that is not opposite.

	Usage: `raise NotOppositeError("hyperplanes 0 and 1 cross")`
	"""

	pass


class NotLessError(CubistInputException):
	"""Raised when p^< is applied to a pair (h, k) without h < k.

	Usage: `raise NotLessError("hyperplane 2 is not below 1")`
	"""

	pass


class OpSupportNonemptyError(CubistInputException):
	"""Raised when project_less receives a point with opposite pairs still active.

	Usage: `except OpSupportNonemptyError: point = projection.project_op(hs, point)`
	"""

	pass
