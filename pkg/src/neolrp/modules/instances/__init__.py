from neolrp.modules.instances.costs import (
    arc_cost,
    cost_matrix,
    depot_cost,
    routing_cost,
    solution_cost,
    tour_cost,
)
from neolrp.modules.instances.features import canonical_order, normalize_features
from neolrp.modules.instances.model import (
    ClrpInstance,
    ClrpSolution,
    Customer,
    Depot,
    LocationAllocation,
    NormalizedFeatures,
    Point,
    RoundingMode,
    VrpCustomer,
    VrpInstance,
)
from neolrp.modules.instances.prodhon import (
    format_prodhon,
    instance_name,
    load_instance,
    parse_prodhon,
)
from neolrp.modules.instances.validation import (
    Violation,
    ViolationKind,
    allocation_violations,
    validate_solution,
)

__all__ = [
    "ClrpInstance",
    "ClrpSolution",
    "Customer",
    "Depot",
    "LocationAllocation",
    "NormalizedFeatures",
    "Point",
    "RoundingMode",
    "Violation",
    "ViolationKind",
    "VrpCustomer",
    "VrpInstance",
    "allocation_violations",
    "arc_cost",
    "canonical_order",
    "cost_matrix",
    "depot_cost",
    "format_prodhon",
    "instance_name",
    "load_instance",
    "normalize_features",
    "parse_prodhon",
    "routing_cost",
    "solution_cost",
    "tour_cost",
    "validate_solution",
]
