from pydantic import BaseModel, Field


class SystemConfig(BaseModel):
	version: str = Field(default="dev", description="Installed cubist version, filled in by the configuration loader.")
