from pathlib import Path

from pydantic import BaseModel, Field

from cubist.domain.cli.config import CLIConfig
from cubist.domain.cover.config import CoverConfig
from cubist.domain.development.config import DevelopmentConfig
from cubist.domain.hyperplanes.config import HyperplanesConfig
from cubist.domain.instances.config import InstancesConfig
from cubist.domain.interpolation.config import InterpolationConfig
from cubist.domain.system.config import SystemConfig
from cubist.domain.tower.config import TowerConfig

PROJECT_ROOT: Path = Path.cwd()
CUBIST_DIR: Path = PROJECT_ROOT / ".cubist"
CUBIST_CACHE_DIR: Path = CUBIST_DIR / "cache"
CUBIST_CONFIG_FILE: Path = CUBIST_DIR / "config.yaml"

DOTENV_PATH: Path = PROJECT_ROOT / ".env"


class CubistConfig(BaseModel):
	project_root: Path = Field(default=PROJECT_ROOT, exclude=True)
	cubist_dir: Path = Field(default=CUBIST_DIR, exclude=True)
	cubist_cache_dir: Path = Field(default=CUBIST_CACHE_DIR, exclude=True)
	dotenv_loaded: bool = Field(default=False, exclude=True, description="Whether a .env file was successfully loaded")

	# keep-sorted start
	cli: CLIConfig = CLIConfig()
	cover: CoverConfig = CoverConfig()
	development: DevelopmentConfig = Field(default_factory=DevelopmentConfig, exclude=True)
	hyperplanes: HyperplanesConfig = HyperplanesConfig()
	instances: InstancesConfig = InstancesConfig()
	interpolation: InterpolationConfig = InterpolationConfig()
	system: SystemConfig = Field(default_factory=SystemConfig, exclude=True)
	tower: TowerConfig = TowerConfig()
	# keep-sorted end
