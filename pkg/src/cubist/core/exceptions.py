class CubistException(Exception):
	"""Base exception for all cubist operations.

	Every exception carries the process exit code the CLI reports for it.
	Usage: `except CubistException as e: sys.exit(e.exit_code)`
	"""

	exit_code: int = 3


class CubistInputException(CubistException):
	"""Raised when an input graph, point, argument or parameter is invalid.

	Usage: `raise InvalidGraphError("edge (3, 3) is a loop")`
	"""

	exit_code = 1


class CubistConfigException(CubistInputException):
	"""Raised when configuration validation fails or required settings are missing.

	Usage: `except CubistConfigException as e: ...`
	"""

	pass


class CubistPropertyViolation(CubistException):
	"""Raised when a verified property of a construction does not hold.

	Examples are an observed Lipschitz constant above the bound, or a cover
	component whose image is not inside a single star.
	Usage: `raise CubistPropertyViolation("component 3 meets two stars")`
	"""

	exit_code = 2


class CubistInternalError(CubistException):
	"""Raised when an internal invariant breaks; always indicates a bug.

	Usage: `raise CubistInternalError("hyperplane 4 splits its component into 3 parts")`
	"""

	exit_code = 3
