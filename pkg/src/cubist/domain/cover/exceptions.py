from cubist.core.exceptions import CubistInputException


class DimensionTooLargeError(CubistInputException):
	"""Raised when the star separation constant is requested above `cover.max_dimension`.

	Usage: `raise DimensionTooLargeError("dimension 4 exceeds the configured maximum 3")`
	"""

	pass


class InvalidRadiusError(CubistInputException):
	"""Raised when the cover radius r is not a positive rational.

	Usage: `raise InvalidRadiusError("r must be positive, got 0/1")`
	"""

	pass
