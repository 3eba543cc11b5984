from pathlib import Path
from typing import Any, Dict, Optional

from cubist.core.service.base_service import Service
from cubist.core.utils import dump_json
from cubist.domain.hyperplanes.models import HyperplaneSet
from cubist.domain.median.models import MedianGraph, RawGraph


class GraphIOService(Service):
	"""Graph files and DOT export.

	Usage: `graph_io.write(graph, Path("grid.json"))`
	Usage: `dot = graph_io.to_dot(graph, hs)`
	"""

	async def handle(self, **kwargs) -> Dict[str, Any]:
		return self.to_json(kwargs["graph"])

	def to_json(self, graph: MedianGraph) -> Dict[str, Any]:
		"""The graph file format, with base keys as strings."""
		raw = graph.to_raw()
		return {
			"vertices": raw.vertices,
			"edges": [list(edge) for edge in raw.edges],
			"base": {str(c): v for c, v in (raw.base or {}).items()},
		}

	def parse(self, text: str) -> RawGraph:
		return RawGraph.model_validate_json(text)

	def write(self, graph: MedianGraph, path: Path) -> Path:
		path.parent.mkdir(parents=True, exist_ok=True)
		path.write_text(dump_json(self.to_json(graph), indent=self._config.cli.indent), encoding="utf-8")
		return path

	def to_dot(self, graph: MedianGraph, hyperplanes: Optional[HyperplaneSet] = None) -> str:
		"""DOT text; bases are drawn as boxes and edges carry their hyperplane id when known."""
		lines = ["graph median {"]
		for v in range(graph.vertex_count):
			shape = ' [shape="box"]' if v in graph.base else ""
			lines.append(f"\t{v}{shape};")
		for u, v in graph.edges:
			label = f' [label="{hyperplanes.hyperplane_of_edge(u, v)}"]' if hyperplanes is not None else ""
			lines.append(f"\t{u} -- {v}{label};")
		lines.append("}")
		return "\n".join(lines) + "\n"
