from neolrp.infrastructure.exceptions import ErrorDetail, NeoLrpError
from neolrp.infrastructure.files import read_text
from neolrp.infrastructure.hashing import canonical_json, config_hash
from neolrp.infrastructure.observability import configure_logging, get_logger
from neolrp.infrastructure.seeding import derive_seed, derive_seeds, make_rng

__all__ = [
    "ErrorDetail",
    "NeoLrpError",
    "canonical_json",
    "config_hash",
    "configure_logging",
    "derive_seed",
    "derive_seeds",
    "get_logger",
    "make_rng",
    "read_text",
]
