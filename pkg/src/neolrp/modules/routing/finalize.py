from neolrp.infrastructure.exceptions import SolutionValidationError
from neolrp.infrastructure.observability import get_logger
from neolrp.infrastructure.seeding import derive_seed
from neolrp.modules.instances import (
    ClrpInstance,
    ClrpSolution,
    LocationAllocation,
    allocation_violations,
    solution_cost,
)
from neolrp.modules.routing.labeling import SolverBudget, solve_vrp
from neolrp.modules.sampling import LabelSolver

logger = get_logger(__name__)


def finalize_routes(
    inst: ClrpInstance,
    alloc: LocationAllocation,
    *,
    budget: SolverBudget | None = None,
    seed: int = 0,
) -> ClrpSolution:
    """Route every open depot's assigned customers and price the result with the true cost."""
    violations = allocation_violations(inst, alloc)
    if violations:
        raise SolutionValidationError("allocation is outside the feasible set", violations)
    budget = budget or SolverBudget.from_settings()

    open_depots: list[int] = []
    allocation: dict[int, tuple[int, ...]] = {}
    routes: dict[int, tuple[tuple[int, ...], ...]] = {}
    for i in alloc.open_indices:
        depot_id = inst.depots[i].id
        assigned = alloc.customers_of(i)
        open_depots.append(depot_id)
        allocation[depot_id] = tuple(inst.customers[j].id for j in assigned)
        if not assigned:
            routes[depot_id] = ()
            continue
        vrp = inst.induced_vrp(i, assigned)
        # exact whenever the cluster fits, regardless of the labeler used for training
        plan = solve_vrp(vrp, LabelSolver.EXACT, budget, derive_seed(seed, i))
        routes[depot_id] = tuple(
            tuple(inst.customers[assigned[k]].id for k in route) for route in plan.routes
        )
        logger.debug(
            "depot_routed",
            depot=depot_id,
            customers=len(assigned),
            routes=plan.n_routes,
            solver=plan.solver_tag.value,
            cost=plan.cost,
        )

    draft = ClrpSolution(open_depots=tuple(open_depots), allocation=allocation, routes=routes)
    return draft.model_copy(update={"total_cost": solution_cost(inst, draft)})
