from pydantic import BaseModel, Field


class CLIConfig(BaseModel):
	"""Command-line configuration."""

	threads: int = Field(default=1, ge=1, description="Number of concurrent workers used for per-vertex computations.")
	indent: int = Field(default=2, ge=0, description="Indentation of emitted JSON artifacts.")
