from cubist.core.exceptions import CubistInputException


class NotConvexError(CubistInputException):
	"""Raised when a gate target is not convex, i.e. not an intersection of halfspaces.

	Usage: `raise NotConvexError("{0, 3} is not convex: I(0, 3) contains 1")`
	"""

	pass


class InvalidPocsetError(CubistInputException):
	"""Raised when a wall system cannot define a pocset.

	Walls must split the point set into two non-empty sides.
	Usage: `raise InvalidPocsetError("wall 2 has an empty side")`
	"""

	pass
