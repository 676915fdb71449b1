from neolrp.modules.milp.backends.protocols import MilpBackend, MilpSolution, SolveStatus
from neolrp.modules.milp.backends.pulp import PulpBackend
from neolrp.modules.milp.backends.registry import (
    DEFAULT_BACKEND_NAME,
    BackendAlreadyRegisteredError,
    BackendNotFoundError,
    BackendRegistry,
    get_registry,
    reset_registry,
)

__all__ = [
    "DEFAULT_BACKEND_NAME",
    "BackendAlreadyRegisteredError",
    "BackendNotFoundError",
    "BackendRegistry",
    "MilpBackend",
    "MilpSolution",
    "PulpBackend",
    "SolveStatus",
    "get_registry",
    "reset_registry",
]
