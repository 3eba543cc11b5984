import networkx as nx

from cubist.core.exceptions import CubistInternalError
from cubist.domain.cli.models import CommandResult, PipelineArgs
from cubist.domain.cli.service.command_registry import Command
from cubist.domain.duality.service.roller_service import RollerService
from cubist.domain.hyperplanes.service.hyperplane_service import HyperplaneService
from cubist.domain.instances.service.instance_service import InstanceService


class RollerCommand(Command):
	"""Enumerate the ultrafilters of every component's pocset and rebuild its dual graph.

	The dual graph must be isomorphic to the component it came from; a mismatch
	is an internal error.
	Usage: `cubist roller --kind hypercube --n 3 --format dot`
	"""

	@property
	def name(self) -> str:
		return "roller"

	@property
	def category(self) -> str:
		return "Duality"

	@property
	def description(self) -> str:
		return "Enumerate ultrafilters per component and emit the dual median graph"

	async def execute(self, args: PipelineArgs) -> CommandResult:
		instances = await self.make(InstanceService)
		hyperplane_service = await self.make(HyperplaneService)
		roller = await self.make(RollerService)

		hyperplanes = hyperplane_service.compute_hyperplanes(instances.load(args))
		graph = hyperplanes.graph
		components = []
		dots = []
		for index, members in enumerate(graph.components):
			pocset = roller.pocset_from_hyperplanes(hyperplanes, index)
			ultrafilters = roller.enumerate_ultrafilters(pocset)
			dual = roller.dual_graph(ultrafilters)
			if not nx.is_isomorphic(dual.graph, graph.graph.subgraph(members)):
				raise CubistInternalError(f"dual graph of component {index} is not isomorphic to the component")

			principal = {
				str(v): ultrafilters.index(roller.vertex_ultrafilter(pocset, hyperplanes, v)) for v in sorted(members)
			}
			components.append(
				{
					"component": index,
					"hyperplanes": list(pocset.labels),
					"ultrafilters": [
						[pocset.labels[i] for i in range(uf.size) if uf.plus_mask >> i & 1] for uf in ultrafilters
					],
					"dual": dual.to_raw().model_dump(),
					"principal": principal,
				}
			)
			dots.append(roller.to_dot(dual, ultrafilters).replace("graph roller {", f"graph roller_{index} {{", 1))

		total = sum(len(c["ultrafilters"]) for c in components)
		return CommandResult(
			payload={"components": components},
			dot="".join(dots),
			message=f"{total} ultrafilter(s) over {len(components)} component(s)",
		)
