from pydantic import BaseModel, Field


class DevelopmentConfig(BaseModel):
	"""Development configuration for internal cross-checks.

	Excluded from serialization; enabled through the CUBIST_DEV_MODE
	environment variable.
	"""

	enable: bool = Field(
		default=False,
		description="Run debug cross-checks such as gate-by-distance and decode-after-every-stage.",
	)
