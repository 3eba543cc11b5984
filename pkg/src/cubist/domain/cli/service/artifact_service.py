from pathlib import Path
from typing import Optional

import click

from cubist.core.logging import log
from cubist.core.service.base_service import Service
from cubist.core.utils import dump_json
from cubist.domain.cli.models import CommandResult, PipelineArgs


class ArtifactService(Service):
	"""Renders command results deterministically and writes them out.

	Identical inputs give byte-identical artifacts: JSON keys are sorted and no
	timestamps or absolute paths are embedded.
	"""

	def render(self, result: CommandResult, output_format: str = "json") -> str:
		"""Usage: `text = artifacts.render(result, "dot")`"""
		if output_format == "dot" and result.dot is not None:
			return result.dot
		return dump_json(result.payload, indent=self._config.cli.indent)

	def write(self, result: CommandResult, args: PipelineArgs) -> Optional[Path]:
		"""Write to `--out` when given, otherwise to stdout.

		Usage: `path = artifacts.write(result, args)`
		"""
		text = self.render(result, args.format)
		if args.out is None:
			click.echo(text, nl=False)
			return None

		args.out.parent.mkdir(parents=True, exist_ok=True)
		args.out.write_text(text, encoding="utf-8")
		log.info("wrote artifact {}", args.out)
		return args.out
