from neolrp.modules.routing.exact import solve_vrp_exact
from neolrp.modules.routing.finalize import finalize_routes
from neolrp.modules.routing.heuristic import solve_vrp_heuristic
from neolrp.modules.routing.labeling import (
    LabelFallback,
    LabelingStats,
    SolverBudget,
    label_dataset,
    label_samples,
    solve_vrp,
)
from neolrp.modules.routing.plan import RoutePlan, plan_cost, plan_violations, vrp_matrix

__all__ = [
    "LabelFallback",
    "LabelingStats",
    "RoutePlan",
    "SolverBudget",
    "finalize_routes",
    "label_dataset",
    "label_samples",
    "plan_cost",
    "plan_violations",
    "solve_vrp",
    "solve_vrp_exact",
    "solve_vrp_heuristic",
    "vrp_matrix",
]
