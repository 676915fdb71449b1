from neolrp.infrastructure.observability.logging import (
    bind_stage,
    configure_logging,
    get_logger,
    get_run_id,
    get_stage,
    set_run_id,
)

__all__ = [
    "bind_stage",
    "configure_logging",
    "get_logger",
    "get_run_id",
    "get_stage",
    "set_run_id",
]
