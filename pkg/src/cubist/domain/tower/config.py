from pydantic import BaseModel, Field


class TowerConfig(BaseModel):
	"""Quotient tower configuration."""

	vertex_budget: int = Field(
		default=400,
		description="Largest source graph (in vertices) on which exhaustive Lipschitz verification is attempted.",
	)
	max_stages: int = Field(
		default=256,
		description="Hard cap on the number of tower stages; a smaller epsilon than this allows is rejected.",
	)
