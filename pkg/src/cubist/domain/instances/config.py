from pydantic import BaseModel, Field


class InstancesConfig(BaseModel):
	"""Instance generator configuration."""

	max_random_vertices: int = Field(
		default=40,
		description="Random pocset duals with more vertices than this are rejected and resampled.",
	)
	max_random_attempts: int = Field(
		default=200,
		description="Number of resampling attempts before a random instance request fails.",
	)
	random_nesting: float = Field(
		default=0.35,
		ge=0,
		le=1,
		description="Probability of a nesting edge between two halfspaces in a random pocset.",
	)
