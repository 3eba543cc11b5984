from cubist.core.exceptions import CubistInputException


class BudgetExceededError(CubistInputException):
	"""Raised when a request exceeds a configured size budget.

	Covers exhaustive verification on graphs above `tower.vertex_budget` and
	towers needing more than `tower.max_stages` stages.
	Usage: `raise BudgetExceededError("100 vertices exceed the verification budget of 64")`
	"""

	pass


class InvalidEpsilonError(CubistInputException):
	"""Raised when the target Lipschitz constant is outside (0, 1].

	Usage: `raise InvalidEpsilonError("epsilon must lie in (0, 1], got 3/2")`
	"""

	pass
