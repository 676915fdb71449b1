from collections.abc import Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict

from neolrp.modules.instances import VrpInstance, cost_matrix
from neolrp.modules.sampling import LabelSolver


class RoutePlan(BaseModel):
    """Routes hold 0-based indices into the instance's customer list."""

    model_config = ConfigDict(frozen=True)

    routes: tuple[tuple[int, ...], ...]
    cost: float
    solver_tag: LabelSolver

    @property
    def n_routes(self) -> int:
        return len(self.routes)


def vrp_matrix(vrp: VrpInstance) -> np.ndarray:
    """Node 0 is the depot, node k is customer k - 1."""
    points = [vrp.depot, *((c.x, c.y) for c in vrp.customers)]
    return cost_matrix(points, vrp.rounding_mode)


def node_route_cost(matrix: np.ndarray, nodes: Sequence[int]) -> float:
    if not nodes:
        return 0.0
    total = float(matrix[0, nodes[0]])
    for a, b in zip(nodes, nodes[1:], strict=False):
        total += float(matrix[a, b])
    return total + float(matrix[nodes[-1], 0])


def plan_cost(
    vrp: VrpInstance, routes: Sequence[Sequence[int]], matrix: np.ndarray | None = None
) -> float:
    matrix = vrp_matrix(vrp) if matrix is None else matrix
    total = vrp.vehicle_cost * len(routes)
    for route in routes:
        total += node_route_cost(matrix, [j + 1 for j in route])
    return total


def plan_violations(vrp: VrpInstance, plan: RoutePlan) -> list[str]:
    problems: list[str] = []
    visited = sorted(j for route in plan.routes for j in route)
    if visited != list(range(vrp.size)):
        problems.append("routes do not partition the customers")
    for k, route in enumerate(plan.routes):
        if not route:
            problems.append(f"route {k} is empty")
        load = sum(vrp.customers[j].demand for j in route)
        if load > vrp.capacity:
            problems.append(f"route {k} load {load} exceeds capacity {vrp.capacity}")
    return problems
