import numpy as np

from neolrp.config import settings
from neolrp.infrastructure.constants import Routing
from neolrp.modules.instances import VrpInstance
from neolrp.modules.routing.plan import RoutePlan, plan_cost, vrp_matrix
from neolrp.modules.sampling import LabelSolver

_EPS = Routing.IMPROVEMENT_EPSILON


class _Search:
    """Mutable route set over matrix nodes (0 = depot) with first-improvement neighborhoods."""

    def __init__(
        self,
        matrix: list[list[float]],
        demand: list[int],
        capacity: int,
        vehicle_cost: float,
        budget: int,
    ) -> None:
        self.c = matrix
        self.demand = demand
        self.capacity = capacity
        self.vehicle_cost = vehicle_cost
        self.budget = budget
        self.routes: list[list[int]] = []
        self.loads: list[int] = []

    @property
    def exhausted(self) -> bool:
        return self.budget <= 0

    def load(self, routes: list[list[int]]) -> None:
        self.routes = [list(r) for r in routes if r]
        self.loads = [sum(self.demand[v] for v in r) for r in self.routes]

    def cost(self) -> float:
        return sum(
            (_closed_tour(self.c, r) + self.vehicle_cost for r in self.routes), 0.0
        )

    def _neighbors(self, route: list[int], pos: int) -> tuple[int, int]:
        prev = route[pos - 1] if pos > 0 else 0
        nxt = route[pos + 1] if pos + 1 < len(route) else 0
        return prev, nxt

    def savings(self) -> None:
        n = len(self.demand) - 1
        self.load([[v] for v in range(1, n + 1)])
        owner = list(range(-1, n))  # owner[v] = route index of customer v
        c = self.c
        pairs = sorted(
            (
                (c[0][i] + c[0][j] - c[i][j], i, j)
                for i in range(1, n + 1)
                for j in range(i + 1, n + 1)
            ),
            key=lambda item: (-item[0], item[1], item[2]),
        )
        for saving, i, j in pairs:
            if saving + self.vehicle_cost <= _EPS:
                break
            ri, rj = owner[i], owner[j]
            if ri == rj or self.loads[ri] + self.loads[rj] > self.capacity:
                continue
            a, b = self.routes[ri], self.routes[rj]
            if a[-1] == i and b[0] == j:
                merged = a + b
            elif a[0] == i and b[-1] == j:
                merged = b + a
            elif a[-1] == i and b[-1] == j:
                merged = a + b[::-1]
            elif a[0] == i and b[0] == j:
                merged = a[::-1] + b
            else:
                continue
            self.routes[ri] = merged
            self.loads[ri] += self.loads[rj]
            self.routes[rj] = []
            self.loads[rj] = 0
            for v in b:
                owner[v] = ri
        self.load(self.routes)

    def relocate(self) -> bool:
        c = self.c
        for a, ra in enumerate(self.routes):
            for p, v in enumerate(ra):
                prev, nxt = self._neighbors(ra, p)
                if len(ra) == 1:
                    removal = c[0][v] + c[v][0] + self.vehicle_cost
                else:
                    removal = c[prev][v] + c[v][nxt] - c[prev][nxt]
                for b, rb in enumerate(self.routes):
                    if b == a or self.loads[b] + self.demand[v] > self.capacity:
                        continue
                    for q in range(len(rb) + 1):
                        left = rb[q - 1] if q > 0 else 0
                        right = rb[q] if q < len(rb) else 0
                        insertion = c[left][v] + c[v][right] - c[left][right]
                        if insertion - removal < -_EPS:
                            self._move(a, p, b, q)
                            return True
                if len(ra) > 1 and c[0][v] + c[v][0] + self.vehicle_cost - removal < -_EPS:
                    ra.pop(p)
                    self.loads[a] -= self.demand[v]
                    self.routes.append([v])
                    self.loads.append(self.demand[v])
                    return True
        return False

    def _move(self, a: int, p: int, b: int, q: int) -> None:
        v = self.routes[a].pop(p)
        self.loads[a] -= self.demand[v]
        self.routes[b].insert(q, v)
        self.loads[b] += self.demand[v]
        if not self.routes[a]:
            del self.routes[a]
            del self.loads[a]

    def swap(self) -> bool:
        c = self.c
        for a in range(len(self.routes)):
            ra = self.routes[a]
            for b in range(a + 1, len(self.routes)):
                rb = self.routes[b]
                for p, v in enumerate(ra):
                    pv, nv = self._neighbors(ra, p)
                    for q, w in enumerate(rb):
                        diff = self.demand[w] - self.demand[v]
                        if self.loads[a] + diff > self.capacity:
                            continue
                        if self.loads[b] - diff > self.capacity:
                            continue
                        pw, nw = self._neighbors(rb, q)
                        delta = (
                            c[pv][w] + c[w][nv] - c[pv][v] - c[v][nv]
                            + c[pw][v] + c[v][nw] - c[pw][w] - c[w][nw]
                        )
                        if delta < -_EPS:
                            ra[p], rb[q] = w, v
                            self.loads[a] += diff
                            self.loads[b] -= diff
                            return True
        return False

    def two_opt(self) -> bool:
        c = self.c
        for route in self.routes:
            n = len(route)
            for i in range(n - 1):
                before = route[i - 1] if i > 0 else 0
                for j in range(i + 1, n):
                    after = route[j + 1] if j + 1 < n else 0
                    delta = (
                        c[before][route[j]] + c[route[i]][after]
                        - c[before][route[i]] - c[route[j]][after]
                    )
                    if delta < -_EPS:
                        route[i : j + 1] = route[i : j + 1][::-1]
                        return True
        return False

    def or_opt(self) -> bool:
        c = self.c
        for route in self.routes:
            n = len(route)
            for length in range(1, min(Routing.MAX_SEGMENT_LENGTH, n - 1) + 1):
                for i in range(n - length + 1):
                    segment = route[i : i + length]
                    prev = route[i - 1] if i > 0 else 0
                    nxt = route[i + length] if i + length < n else 0
                    removal = c[prev][segment[0]] + c[segment[-1]][nxt] - c[prev][nxt]
                    rest = route[:i] + route[i + length :]
                    for q in range(len(rest) + 1):
                        if q == i:
                            continue
                        left = rest[q - 1] if q > 0 else 0
                        right = rest[q] if q < len(rest) else 0
                        insertion = c[left][segment[0]] + c[segment[-1]][right] - c[left][right]
                        if insertion - removal < -_EPS:
                            route[:] = rest[:q] + segment + rest[q:]
                            return True
        return False

    def descend(self) -> None:
        moves = (self.relocate, self.swap, self.two_opt, self.or_opt)
        while not self.exhausted:
            for move in moves:
                if move():
                    self.budget -= 1
                    break
            else:
                return

    def perturb(self, rng: np.random.Generator, k: int) -> None:
        customers = [v for r in self.routes for v in r]
        picks = rng.choice(len(customers), size=min(k, len(customers)), replace=False)
        removed = [customers[int(i)] for i in picks]
        for v in removed:
            for a, route in enumerate(self.routes):
                if v in route:
                    route.remove(v)
                    self.loads[a] -= self.demand[v]
                    break
        self.load(self.routes)
        for v in removed:
            self._insert_cheapest(v)

    def _insert_cheapest(self, v: int) -> None:
        c = self.c
        best = (c[0][v] + c[v][0] + self.vehicle_cost, -1, 0)
        for b, rb in enumerate(self.routes):
            if self.loads[b] + self.demand[v] > self.capacity:
                continue
            for q in range(len(rb) + 1):
                left = rb[q - 1] if q > 0 else 0
                right = rb[q] if q < len(rb) else 0
                value = c[left][v] + c[v][right] - c[left][right]
                if value < best[0] - _EPS:
                    best = (value, b, q)
        _, b, q = best
        if b == -1:
            self.routes.append([v])
            self.loads.append(self.demand[v])
        else:
            self.routes[b].insert(q, v)
            self.loads[b] += self.demand[v]


def _closed_tour(c: list[list[float]], route: list[int]) -> float:
    total = c[0][route[0]]
    for a, b in zip(route, route[1:], strict=False):
        total += c[a][b]
    return total + c[route[-1]][0]


def solve_vrp_heuristic(
    vrp: VrpInstance,
    *,
    max_iterations: int | None = None,
    restarts: int | None = None,
    seed: int = 0,
) -> RoutePlan:
    if vrp.size == 0:
        return RoutePlan(routes=(), cost=0.0, solver_tag=LabelSolver.HEURISTIC)
    budget = settings.routing.max_iterations if max_iterations is None else max_iterations
    restarts = settings.routing.restarts if restarts is None else restarts

    dense = vrp_matrix(vrp)
    search = _Search(
        matrix=dense.tolist(),
        demand=[0, *(c.demand for c in vrp.customers)],
        capacity=vrp.capacity,
        vehicle_cost=vrp.vehicle_cost,
        budget=budget,
    )
    search.savings()
    search.descend()
    best_routes = [list(r) for r in search.routes]
    best_cost = search.cost()

    rng = np.random.default_rng(seed)
    for _ in range(restarts):
        if search.exhausted or vrp.size < 2:
            break
        search.load(best_routes)
        search.perturb(rng, Routing.PERTURBATION_SIZE)
        search.descend()
        candidate = search.cost()
        if candidate < best_cost - _EPS:
            best_routes = [list(r) for r in search.routes]
            best_cost = candidate

    routes = sorted(tuple(v - 1 for v in r) for r in best_routes)
    return RoutePlan(
        routes=tuple(routes),
        cost=plan_cost(vrp, routes, dense),
        solver_tag=LabelSolver.HEURISTIC,
    )

