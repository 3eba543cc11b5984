import os
from importlib.metadata import PackageNotFoundError, version
from pathlib import Path
from typing import Optional

import yaml
from pydantic import ValidationError

from cubist.core.config.config import CUBIST_CONFIG_FILE, CubistConfig
from cubist.core.exceptions import CubistConfigException


class ConfigLoaderService:
	"""Build the CubistConfig from the optional YAML file and the environment.

	Usage: `config = ConfigLoaderService()()`
	Usage: `config = ConfigLoaderService(Path("ci.yaml"))()`
	"""

	def __init__(self, config_file: Optional[Path] = None):
		self._config_file = config_file or CUBIST_CONFIG_FILE

	def _load_yaml_config(self) -> dict:
		"""Parse the YAML file, or return an empty mapping when it does not exist.

		Usage: `config_dict = self._load_yaml_config()`
		"""
		if not self._config_file.exists():
			return {}

		with open(self._config_file) as f:
			try:
				config = yaml.safe_load(f)
			except yaml.YAMLError as e:
				raise CubistConfigException(f"Could not parse {self._config_file}: {e}") from e

		if config is not None and not isinstance(config, dict):
			raise CubistConfigException(f"{self._config_file} must contain a mapping at the top level")

		return config if config is not None else {}

	def _apply_system_config(self, config: CubistConfig) -> CubistConfig:
		try:
			config.system.version = version("cubist")
		except PackageNotFoundError:
			pass

		return config

	def _apply_environment_overrides(self, config: CubistConfig) -> CubistConfig:
		"""Apply CUBIST_DEV_MODE and CUBIST_THREADS.

		Usage: `config = self._apply_environment_overrides(config)`
		"""
		if os.getenv("CUBIST_DEV_MODE", "").lower() in ("true", "1", "yes"):
			config.development.enable = True

		threads = os.getenv("CUBIST_THREADS", "")
		if threads:
			if not threads.isdigit() or int(threads) < 1:
				raise CubistConfigException(f"CUBIST_THREADS must be a positive integer, got {threads!r}")
			config.cli.threads = int(threads)

		return config

	def __call__(self) -> CubistConfig:
		"""Load the configuration.

		Usage: `config = loader()`
		"""
		yaml_config = self._load_yaml_config()

		try:
			config = CubistConfig(**yaml_config)
		except ValidationError as e:
			raise CubistConfigException(f"Invalid configuration in {self._config_file}:\n{e}") from e

		config = self._apply_system_config(config)
		config = self._apply_environment_overrides(config)

		return config
