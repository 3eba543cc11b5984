from pydantic import BaseModel, Field


class CoverConfig(BaseModel):
	"""Triangulation and cover configuration."""

	max_dimension: int = Field(
		default=3,
		description="Largest cube dimension for which the star separation constant is computed.",
	)
	cache_delta: bool = Field(
		default=True,
		description="Persist computed star separation constants to delta.json in the cache directory.",
	)
	recompute_delta: bool = Field(
		default=False,
		description="Ignore pinned and cached star separation constants and rerun the exact search.",
	)
