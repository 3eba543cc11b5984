from cubist.core.exceptions import CubistInputException


class InvalidParamsError(CubistInputException):
	"""Raised when command-line parameters are missing, out of range or inconsistent.

	Usage: `raise InvalidParamsError("strip_gluing needs m ≤ n + 1 strips")`
	"""

	pass
