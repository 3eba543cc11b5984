from cubist.core.exceptions import CubistInputException


class UnknownHyperplaneError(CubistInputException):
	"""Raised when a hyperplane id is outside 0..|H|-1.

	Usage: `raise UnknownHyperplaneError("hyperplane 9 does not exist; ids run 0..3")`
	"""

	pass
