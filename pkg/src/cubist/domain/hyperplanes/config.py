from pydantic import BaseModel, Field


class HyperplanesConfig(BaseModel):
	"""Hyperplane domain configuration."""

	dense_table_limit: int = Field(
		default=2**14,
		description="Relation tables over at most this many hyperplanes are materialised eagerly; larger tables are filled lazily, one memoised pair at a time.",
	)
