import math

from neolrp.config import settings
from neolrp.infrastructure.exceptions import SizeLimitError
from neolrp.modules.instances import VrpInstance
from neolrp.modules.routing.plan import RoutePlan, plan_cost, vrp_matrix
from neolrp.modules.sampling import LabelSolver


def _tours(vrp: VrpInstance, matrix: list[list[float]]) -> tuple[list[float], list[list[int]]]:
    """Held-Karp over capacity-feasible subsets: closed-tour cost (plus F) and order per mask."""
    n = vrp.size
    full = 1 << n
    demand = [c.demand for c in vrp.customers]

    load = [0] * full
    for mask in range(1, full):
        low = (mask & -mask).bit_length() - 1
        load[mask] = load[mask & (mask - 1)] + demand[low]

    # path[mask][last]: cheapest depot -> ... -> last covering mask
    path = [[math.inf] * n for _ in range(full)]
    parent = [[-1] * n for _ in range(full)]
    for j in range(n):
        path[1 << j][j] = matrix[0][j + 1]

    for mask in range(1, full):
        if load[mask] > vrp.capacity:
            continue
        row = path[mask]
        for last in range(n):
            base = row[last]
            if base == math.inf:
                continue
            for nxt in range(n):
                bit = 1 << nxt
                if mask & bit:
                    continue
                ext = mask | bit
                if load[ext] > vrp.capacity:
                    continue
                value = base + matrix[last + 1][nxt + 1]
                if value < path[ext][nxt]:
                    path[ext][nxt] = value
                    parent[ext][nxt] = last

    tour_cost = [math.inf] * full
    tour_order: list[list[int]] = [[] for _ in range(full)]
    for mask in range(1, full):
        if load[mask] > vrp.capacity:
            continue
        best, best_last = math.inf, -1
        for last in range(n):
            value = path[mask][last] + matrix[last + 1][0]
            if value < best:
                best, best_last = value, last
        order: list[int] = []
        cur_mask, cur = mask, best_last
        while cur != -1:
            order.append(cur)
            prev = parent[cur_mask][cur]
            cur_mask ^= 1 << cur
            cur = prev
        tour_cost[mask] = best + vrp.vehicle_cost
        tour_order[mask] = order[::-1]
    return tour_cost, tour_order


def solve_vrp_exact(vrp: VrpInstance, *, limit: int | None = None) -> RoutePlan:
    limit = settings.routing.exact_limit if limit is None else limit
    if vrp.size > limit:
        raise SizeLimitError(vrp.size, limit)
    if vrp.size == 0:
        return RoutePlan(routes=(), cost=0.0, solver_tag=LabelSolver.EXACT)

    dense = vrp_matrix(vrp)
    matrix = dense.tolist()
    tour_cost, tour_order = _tours(vrp, matrix)

    full = (1 << vrp.size) - 1
    best = [math.inf] * (full + 1)
    choice = [0] * (full + 1)
    best[0] = 0.0
    for mask in range(1, full + 1):
        low = mask & -mask
        rest = mask ^ low
        # every route set of mask has exactly one route holding its lowest customer
        sub = rest
        while True:
            route = sub | low
            if tour_cost[route] != math.inf:
                value = tour_cost[route] + best[mask ^ route]
                if value < best[mask]:
                    best[mask], choice[mask] = value, route
            if sub == 0:
                break
            sub = (sub - 1) & rest

    routes: list[tuple[int, ...]] = []
    mask = full
    while mask:
        route = choice[mask]
        routes.append(tuple(tour_order[route]))
        mask ^= route
    routes.sort()
    return RoutePlan(
        routes=tuple(routes),
        cost=plan_cost(vrp, routes, dense),
        solver_tag=LabelSolver.EXACT,
    )
