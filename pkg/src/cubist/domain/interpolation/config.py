from typing import Optional

from pydantic import BaseModel, Field


class InterpolationConfig(BaseModel):
	"""Interpolation domain configuration."""

	ell: Optional[int] = Field(
		default=None,
		ge=1,
		description="Override for the weight parameter ℓ. When unset each component uses 3^(D-1)·D, with ℓ = 1 for D ≤ 1.",
	)
