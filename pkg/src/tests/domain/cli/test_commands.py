"""End-to-end tests of the pipeline subcommands through the Cubist runner."""

import json

import pytest
from click.testing import CliRunner

from cubist.core.cli import SUBCOMMANDS, cli
from cubist.main import Cubist


@pytest.fixture
def run_command(test_container, tmp_path):
	"""Run a subcommand with `--out` in a temporary directory.

	Usage: `code, text = await run_command("validate", kind="path", n=5)`
	"""

	async def _run_command(name, **options):
		out = tmp_path / f"{name}.out"
		out.unlink(missing_ok=True)
		code = await Cubist(test_container).run(name, {**options, "out": out})
		return code, out.read_text(encoding="utf-8") if out.exists() else None

	return _run_command


async def payload_of(run_command, name, **options):
	code, text = await run_command(name, **options)
	return code, json.loads(text) if text is not None else None


class TestValidate:
	"""Test suite for the validate subcommand."""

	@pytest.mark.asyncio
	async def test_path_is_median(self, run_command):
		"""Test that P5 validates with a single component."""
		code, payload = await payload_of(run_command, "validate", kind="path", n=5)

		assert code == 0
		assert payload["median"] is True
		assert payload["components"] == [[0, 1, 2, 3, 4]]

	@pytest.mark.asyncio
	async def test_cycle_is_not_median(self, run_command, tmp_path):
		"""Test that C5 is reported with a counterexample triple and exit code 1."""
		path = tmp_path / "c5.json"
		path.write_text(json.dumps({"vertices": 5, "edges": [[0, 1], [1, 2], [2, 3], [3, 4], [0, 4]]}))

		code, payload = await payload_of(run_command, "validate", file=path)

		assert code == 1
		assert payload["median"] is False
		assert len(payload["triple"]) == 3

	@pytest.mark.asyncio
	async def test_dot_output(self, run_command):
		"""Test that --format dot writes a DOT graph."""
		code, text = await run_command("validate", kind="path", n=3, format="dot")

		assert code == 0
		assert text.startswith("graph median {")
		assert "\t0 -- 1;" in text

	@pytest.mark.asyncio
	async def test_artifacts_are_deterministic(self, run_command):
		"""Test that two runs produce byte-identical artifacts."""
		_, first = await run_command("map", kind="grid", n=3, m=3, epsilon="1")
		_, second = await run_command("map", kind="grid", n=3, m=3, epsilon="1")

		assert first == second


class TestStructureCommands:
	"""Test suite for hyperplanes, color, quotient, roller and gate."""

	@pytest.mark.asyncio
	async def test_hyperplanes(self, run_command):
		"""Test that the square has two hyperplanes."""
		code, payload = await payload_of(run_command, "hyperplanes", kind="grid", n=2, m=2)

		assert code == 0
		assert len(payload["hyperplanes"]) == 2

	@pytest.mark.asyncio
	async def test_color(self, run_command):
		"""Test the P5 colouring through the command."""
		code, payload = await payload_of(run_command, "color", kind="path", n=5)

		assert code == 0
		assert payload["color"] == [1, 0, 1, 0]
		assert payload["k_c"] == [1, 3]
		assert payload["dimension"] == [1]

	@pytest.mark.asyncio
	async def test_quotient(self, run_command):
		"""Test that --hyperplanes given as a comma list selects the kept set."""
		code, payload = await payload_of(run_command, "quotient", kind="path", n=5, hyperplanes="1,3")

		assert code == 0
		assert payload["classes"] == [[0, 1], [2, 3], [4]]

	@pytest.mark.asyncio
	async def test_quotient_needs_hyperplanes(self, run_command):
		"""Test that quotient without --hyperplanes exits with 1."""
		code, text = await run_command("quotient", kind="path", n=5)

		assert code == 1
		assert text is None

	@pytest.mark.asyncio
	async def test_roller(self, run_command):
		"""Test that the square's dual has four ultrafilters."""
		code, payload = await payload_of(run_command, "roller", kind="grid", n=2, m=2)

		assert code == 0
		assert len(payload["components"][0]["ultrafilters"]) == 4
		assert len(payload["components"][0]["principal"]) == 4

	@pytest.mark.asyncio
	async def test_gate(self, run_command):
		"""Test the gate of 0 onto {3, 4} in P5."""
		code, payload = await payload_of(run_command, "gate", kind="path", n=5, set="3,4", base=0)

		assert code == 0
		assert payload["gate"] == 3
		assert payload["distance"] == 3


class TestTowerAndCover:
	"""Test suite for map, delta, cover and certify."""

	@pytest.mark.asyncio
	async def test_map(self, run_command):
		"""Test the P5 tower at ε = 1 with its verification reports."""
		code, payload = await payload_of(run_command, "map", kind="path", n=5, epsilon="1")

		assert code == 0
		assert payload["tower"]["N"] == 1
		assert payload["images"]["2"]["entries"] == {"0": "1/2"}
		assert payload["lipschitz"]["ok"] is True

	@pytest.mark.asyncio
	async def test_map_needs_epsilon(self, run_command):
		"""Test that map without --epsilon exits with 1."""
		code, _ = await run_command("map", kind="path", n=5)

		assert code == 1

	@pytest.mark.asyncio
	async def test_map_rejects_decimal_epsilon(self, run_command):
		"""Test that ε must be written as p/q."""
		code, _ = await run_command("map", kind="path", n=5, epsilon="0.5")

		assert code == 1

	@pytest.mark.asyncio
	async def test_delta(self, run_command):
		"""Test δ(1) through the command."""
		code, payload = await payload_of(run_command, "delta", dimension=1)

		assert code == 0
		assert payload["delta"] == "1/4"

	@pytest.mark.asyncio
	async def test_cover(self, run_command):
		"""Test that the collapsed P5 cover has M = 4."""
		code, payload = await payload_of(run_command, "cover", kind="path", n=5, r="1")

		assert code == 0
		assert payload["max_diameter"] == 4
		assert payload["epsilon"] == "1/8"

	@pytest.mark.asyncio
	async def test_certify(self, run_command):
		"""Test that certify re-verifies the P5 cover."""
		code, payload = await payload_of(run_command, "certify", kind="path", n=5, r="1")

		assert code == 0
		assert payload["verification"]["ok"] is True


class TestRunner:
	"""Test suite for dispatch and error handling."""

	@pytest.mark.asyncio
	async def test_unknown_subcommand(self, run_command):
		"""Test that an unregistered name exits with 1."""
		code, _ = await run_command("triangulate", kind="path", n=5)

		assert code == 1

	@pytest.mark.asyncio
	async def test_invalid_option_value(self, run_command):
		"""Test that option validation failures exit with 1."""
		code, _ = await run_command("validate", kind="path", n=5, threads=0)

		assert code == 1

	def test_help_lists_subcommands(self):
		"""Test that every subcommand is registered on the click group."""
		result = CliRunner().invoke(cli, ["--help"])

		assert result.exit_code == 0
		for name in SUBCOMMANDS:
			assert name in result.output
