import math
from collections.abc import Sequence

import numpy as np

from neolrp.infrastructure.constants import Routing
from neolrp.infrastructure.exceptions import SolutionValidationError
from neolrp.modules.instances.model import ClrpInstance, ClrpSolution, Point, RoundingMode
from neolrp.modules.instances.validation import validate_solution


def arc_cost(a: Point, b: Point, mode: RoundingMode = RoundingMode.RAW) -> float:
    distance = math.hypot(a[0] - b[0], a[1] - b[1])
    if mode == RoundingMode.PRODHON100:
        return math.ceil(Routing.PRODHON_SCALE * distance)
    return distance


def cost_matrix(points: Sequence[Point], mode: RoundingMode = RoundingMode.RAW) -> np.ndarray:
    n = len(points)
    matrix = np.zeros((n, n), dtype=np.float64)
    for a in range(n):
        for b in range(a + 1, n):
            matrix[a, b] = matrix[b, a] = arc_cost(points[a], points[b], mode)
    return matrix


def tour_cost(depot: Point, stops: Sequence[Point], mode: RoundingMode) -> float:
    if not stops:
        return 0.0
    total = arc_cost(depot, stops[0], mode)
    for a, b in zip(stops, stops[1:], strict=False):
        total += arc_cost(a, b, mode)
    return total + arc_cost(stops[-1], depot, mode)


def routing_cost(inst: ClrpInstance, sol: ClrpSolution, depot_id: int) -> float:
    depot = inst.depot_by_id(depot_id)
    routes = sol.routes.get(depot_id, ())
    total = inst.vehicle_fixed_cost * len(routes)
    for route in routes:
        stops = [inst.customer_by_id(c).coord for c in route]
        total += tour_cost(depot.coord, stops, inst.rounding_mode)
    return total


def depot_cost(inst: ClrpInstance, sol: ClrpSolution, depot_id: int) -> float:
    return inst.depot_by_id(depot_id).fixed_cost + routing_cost(inst, sol, depot_id)


def solution_cost(inst: ClrpInstance, sol: ClrpSolution) -> float:
    violations = validate_solution(inst, sol)
    if violations:
        raise SolutionValidationError("solution is infeasible", violations)
    return sum((depot_cost(inst, sol, i) for i in sol.open_depots), 0.0)
