from collections import Counter
from enum import StrEnum

from pydantic import BaseModel, ConfigDict

from neolrp.modules.instances.model import ClrpInstance, ClrpSolution, LocationAllocation


class ViolationKind(StrEnum):
    UNKNOWN_DEPOT = "unknown_depot"
    CLOSED_DEPOT = "closed_depot"
    PARTITION = "partition"
    DEPOT_CAPACITY = "depot_capacity"
    VEHICLE_CAPACITY = "vehicle_capacity"
    ROUTE_COVERAGE = "route_coverage"
    SHAPE = "shape"


class Violation(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: ViolationKind
    ids: tuple[int, ...]
    message: str


def _check_depots(inst: ClrpInstance, sol: ClrpSolution) -> list[Violation]:
    known = {d.id for d in inst.depots}
    open_set = set(sol.open_depots)
    violations: list[Violation] = []

    referenced = open_set | set(sol.allocation) | set(sol.routes)
    for depot_id in sorted(referenced - known):
        violations.append(
            Violation(
                kind=ViolationKind.UNKNOWN_DEPOT,
                ids=(depot_id,),
                message=f"depot {depot_id} does not exist",
            )
        )

    used = {i for i, js in sol.allocation.items() if js} | {i for i, rs in sol.routes.items() if rs}
    for depot_id in sorted((used & known) - open_set):
        violations.append(
            Violation(
                kind=ViolationKind.CLOSED_DEPOT,
                ids=(depot_id,),
                message=f"depot {depot_id} serves customers but is not open",
            )
        )
    return violations


def _check_partition(inst: ClrpInstance, sol: ClrpSolution) -> list[Violation]:
    counts = Counter(j for js in sol.allocation.values() for j in js)
    known = {c.id for c in inst.customers}
    violations: list[Violation] = []

    for customer_id in sorted(set(counts) - known):
        violations.append(
            Violation(
                kind=ViolationKind.PARTITION,
                ids=(customer_id,),
                message=f"customer {customer_id} does not exist",
            )
        )
    for customer_id in sorted(known):
        seen = counts.get(customer_id, 0)
        if seen == 1:
            continue
        holders = tuple(sorted(i for i, js in sol.allocation.items() if customer_id in js))
        message = (
            f"customer {customer_id} is not allocated"
            if seen == 0
            else f"customer {customer_id} allocated {seen} times (depots {list(holders)})"
        )
        violations.append(
            Violation(kind=ViolationKind.PARTITION, ids=(customer_id, *holders), message=message)
        )
    return violations


def _check_capacities(inst: ClrpInstance, sol: ClrpSolution) -> list[Violation]:
    demand = {c.id: c.demand for c in inst.customers}
    capacity = {d.id: d.capacity for d in inst.depots}
    violations: list[Violation] = []

    for depot_id, customers in sorted(sol.allocation.items()):
        if depot_id not in capacity:
            continue
        load = sum(demand.get(j, 0) for j in customers)
        if load > capacity[depot_id]:
            violations.append(
                Violation(
                    kind=ViolationKind.DEPOT_CAPACITY,
                    ids=(depot_id,),
                    message=f"depot {depot_id} load {load} exceeds capacity {capacity[depot_id]}",
                )
            )

    for depot_id, routes in sorted(sol.routes.items()):
        for k, route in enumerate(routes):
            load = sum(demand.get(j, 0) for j in route)
            if load > inst.vehicle_capacity:
                violations.append(
                    Violation(
                        kind=ViolationKind.VEHICLE_CAPACITY,
                        ids=(depot_id, *route),
                        message=(
                            f"route {k} of depot {depot_id} carries {load} "
                            f"over vehicle capacity {inst.vehicle_capacity}"
                        ),
                    )
                )
    return violations


def _check_routes(sol: ClrpSolution) -> list[Violation]:
    violations: list[Violation] = []
    for depot_id in sorted(set(sol.allocation) | set(sol.routes)):
        allocated = Counter(sol.allocation.get(depot_id, ()))
        routes = sol.routes.get(depot_id, ())
        visited = Counter(j for route in routes for j in route)
        if any(len(route) == 0 for route in routes):
            violations.append(
                Violation(
                    kind=ViolationKind.ROUTE_COVERAGE,
                    ids=(depot_id,),
                    message=f"depot {depot_id} has an empty route",
                )
            )
        if visited != allocated:
            mismatch = tuple(sorted(set((visited - allocated) | (allocated - visited))))
            violations.append(
                Violation(
                    kind=ViolationKind.ROUTE_COVERAGE,
                    ids=(depot_id, *mismatch),
                    message=f"routes of depot {depot_id} do not visit exactly its customers",
                )
            )
    return violations


def validate_solution(inst: ClrpInstance, sol: ClrpSolution) -> list[Violation]:
    return [
        *_check_depots(inst, sol),
        *_check_partition(inst, sol),
        *_check_capacities(inst, sol),
        *_check_routes(sol),
    ]


def allocation_violations(inst: ClrpInstance, alloc: LocationAllocation) -> list[Violation]:
    """Membership test for the location-allocation polytope X."""
    n_depots, n_customers = inst.n_depots, inst.n_customers
    if len(alloc.y) != n_depots or len(alloc.x) != n_depots or any(
        len(row) != n_customers for row in alloc.x
    ):
        return [
            Violation(
                kind=ViolationKind.SHAPE,
                ids=(),
                message=(
                    f"allocation shape does not match {n_depots} depots x {n_customers} customers"
                ),
            )
        ]

    violations: list[Violation] = []
    for j, customer in enumerate(inst.customers):
        holders = [i for i in range(n_depots) if alloc.x[i][j]]
        if len(holders) != 1:
            violations.append(
                Violation(
                    kind=ViolationKind.PARTITION,
                    ids=(customer.id, *(inst.depots[i].id for i in holders)),
                    message=f"customer {customer.id} assigned to {len(holders)} depots",
                )
            )
    for i, depot in enumerate(inst.depots):
        assigned = alloc.customers_of(i)
        if assigned and not alloc.y[i]:
            violations.append(
                Violation(
                    kind=ViolationKind.CLOSED_DEPOT,
                    ids=(depot.id,),
                    message=f"depot {depot.id} serves customers but is not open",
                )
            )
        load = sum(inst.customers[j].demand for j in assigned)
        if load > depot.capacity:
            violations.append(
                Violation(
                    kind=ViolationKind.DEPOT_CAPACITY,
                    ids=(depot.id,),
                    message=f"depot {depot.id} load {load} exceeds capacity {depot.capacity}",
                )
            )
    return violations
