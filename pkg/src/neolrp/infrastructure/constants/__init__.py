from neolrp.infrastructure.constants.errors import ERROR_TITLES, ErrorType, ExitCode
from neolrp.infrastructure.constants.milp import Milp
from neolrp.infrastructure.constants.provenance import Provenance
from neolrp.infrastructure.constants.routing import Routing
from neolrp.infrastructure.constants.sampling import Gvs, Sampling
from neolrp.infrastructure.constants.training import Hyperparams, Training

__all__ = [
    "ERROR_TITLES",
    "ErrorType",
    "ExitCode",
    "Gvs",
    "Hyperparams",
    "Milp",
    "Provenance",
    "Routing",
    "Sampling",
    "Training",
]
