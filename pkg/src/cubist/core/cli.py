import sys
from pathlib import Path
from typing import Callable, Optional

import click
from dotenv import load_dotenv
from rich.traceback import install

from cubist.core.config.config import DOTENV_PATH
from cubist.core.exceptions import CubistConfigException
from cubist.core.logging import configure_logging

SUBCOMMANDS = {
	"validate": "Validate that an instance is a median graph.",
	"hyperplanes": "List hyperplanes, their halfspaces and the relation table.",
	"color": "Compute rank vectors, predecessors and the hyperplane 2-coloring.",
	"quotient": "Collapse every hyperplane outside --hyperplanes.",
	"roller": "Enumerate ultrafilters per component and emit the dual graph.",
	"gate": "Nearest point of the convex set --set to --base.",
	"map": "Build the quotient tower for --epsilon with per-vertex images.",
	"cover": "Build the star cover at scale --r with its certificate.",
	"certify": "Build the cover at scale --r and re-verify it from scratch.",
	"delta": "Compute the star separation constant for --dimension.",
}


def pipeline_options(f: Callable) -> Callable:
	"""Attach the option set shared by every subcommand."""
	options = [
		click.option("--kind", default=None, help="Generator kind: grid, path, tree, hypercube_grid, hypercube, staircase, strip_gluing or random_pocset (a random DAG of n halfspaces with m opposite pairs)."),
		click.option("--n", "n", type=int, default=None, help="First size parameter of the generator."),
		click.option("--m", "m", type=int, default=None, help="Second size parameter of the generator."),
		click.option("--seed", type=int, default=0, show_default=True, help="Seed for random instances."),
		click.option("--file", type=click.Path(exists=True, dir_okay=False, path_type=Path), default=None),
		click.option("--base", type=int, default=None, help="Base vertex of its component; gate origin."),
		click.option("--epsilon", default=None, help="Lipschitz target p/q for map."),
		click.option("--ell", type=int, default=None, help="Override the weight parameter ℓ."),
		click.option("--r", "r", default=None, help="Cover scale p/q."),
		click.option("--threads", type=int, default=None, help="Concurrent workers for per-vertex images."),
		click.option("--out", type=click.Path(dir_okay=False, path_type=Path), default=None),
		click.option("--format", "format", type=click.Choice(["json", "dot"]), default="json", show_default=True),
		click.option("--set", "set", default=None, help="Comma separated vertex ids for gate."),
		click.option("--hyperplanes", default=None, help="Comma separated hyperplane ids for quotient."),
		click.option("--dimension", type=int, default=None, help="Cube dimension for delta."),
	]
	for option in reversed(options):
		f = option(f)
	return f


@click.group()
@click.version_option(package_name="cubist")
@click.option(
	"--config",
	"config_file",
	type=click.Path(dir_okay=False, path_type=Path),
	default=None,
	help="Configuration file, .cubist/config.yaml by default.",
)
@click.pass_context
def cli(ctx: click.Context, config_file: Optional[Path]):
	"""Median graphs, quotient towers and the star cover of finite cube complexes."""
	from cubist.domain.system.service.config_loader_service import ConfigLoaderService

	install()
	found_dotenv = load_dotenv(DOTENV_PATH, override=True)

	try:
		config = ConfigLoaderService(config_file)()
	except CubistConfigException as e:
		click.echo(f"Error: {e}", err=True)
		sys.exit(e.exit_code)
	config.dotenv_loaded = found_dotenv
	configure_logging(config)
	ctx.obj = config


def _subcommand(name: str, help_text: str) -> click.Command:
	@click.command(name=name, help=help_text)
	@pipeline_options
	@click.pass_obj
	def command(config, **options):
		from cubist.main import run

		sys.exit(run(config, name, options))

	return command


for _name, _help in SUBCOMMANDS.items():
	cli.add_command(_subcommand(_name, _help))


if __name__ == "__main__":
	cli()
