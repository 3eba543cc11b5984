import sys
from typing import TYPE_CHECKING

from loguru import logger

if TYPE_CHECKING:
	from cubist.core.config.config import CubistConfig

logger.configure(handlers=[{"sink": sys.stderr, "level": "WARNING", "backtrace": False}])


def configure_logging(config: "CubistConfig") -> None:
	"""Route logs to the cache-dir log file, cleared for each run.

	Development mode also mirrors DEBUG output to stderr.
	Usage: `configure_logging(config)` once the configuration is loaded
	"""
	config.cubist_cache_dir.mkdir(parents=True, exist_ok=True)
	log_file = config.cubist_cache_dir / "cubist.log"
	log_file.write_text("")

	stderr_level = "DEBUG" if config.development.enable else "WARNING"
	logger.configure(
		handlers=[
			{"sink": log_file, "level": "DEBUG", "serialize": False, "backtrace": True},
			{"sink": sys.stderr, "level": stderr_level, "backtrace": False},
		],
	)


log = logger
