from pydantic import BaseModel, ConfigDict

from neolrp.config import settings
from neolrp.infrastructure.constants import Milp
from neolrp.infrastructure.exceptions import ConfigError
from neolrp.infrastructure.observability import get_logger
from neolrp.modules.instances import LocationAllocation
from neolrp.modules.milp.backends import (
    BackendNotFoundError,
    MilpBackend,
    MilpSolution,
    SolveStatus,
    get_registry,
)
from neolrp.modules.milp.model import MilpModel

logger = get_logger(__name__)


class MilpResult(BaseModel):
    """Incumbent of a solved model; `gamma` is keyed by depot id and empty for FLP models."""

    model_config = ConfigDict(frozen=True)

    status: SolveStatus
    objective: float | None = None
    allocation: LocationAllocation | None = None
    gamma: dict[int, float] = {}
    runtime: float = 0.0
    backend: str = ""

    @property
    def feasible(self) -> bool:
        return self.allocation is not None


def resolve_backend(name: str | None = None, engine: str | None = None) -> MilpBackend:
    backend_name = name or settings.solver.backend
    try:
        return get_registry().create(backend_name, engine or settings.solver.engine)
    except BackendNotFoundError as e:
        raise ConfigError(
            f"unknown MILP backend '{backend_name}'",
            errors=[{"field": "solver.backend", "known": get_registry().names}],
        ) from e


def _binary(value: float) -> int:
    return 1 if value > Milp.INTEGRALITY_THRESHOLD else 0


def extract_result(model: MilpModel, solution: MilpSolution, backend: str = "") -> MilpResult:
    if not solution.status.has_solution:
        return MilpResult(status=solution.status, runtime=solution.runtime, backend=backend)
    values = solution.values
    allocation = LocationAllocation(
        y=tuple(_binary(values[model.y[i]]) for i in model.depot_ids),
        x=tuple(
            tuple(_binary(values[model.x[i, j]]) for j in model.customer_ids)
            for i in model.depot_ids
        ),
    )
    gamma = {i: float(values[index]) for i, index in model.gamma.items()}
    return MilpResult(
        status=solution.status,
        objective=solution.objective,
        allocation=allocation,
        gamma=gamma,
        runtime=solution.runtime,
        backend=backend,
    )


def solve_model(
    model: MilpModel,
    backend: MilpBackend | str | None = None,
    *,
    time_limit: float | None = None,
    mip_gap: float | None = None,
    threads: int | None = None,
    seed: int | None = None,
) -> MilpResult:
    engine = backend if isinstance(backend, MilpBackend) else resolve_backend(backend)
    solution = engine.solve(
        model,
        time_limit=settings.solver.time_limit if time_limit is None else time_limit,
        mip_gap=settings.solver.mip_gap if mip_gap is None else mip_gap,
        threads=settings.solver.threads if threads is None else threads,
        seed=seed,
    )
    result = extract_result(model, solution, backend=engine.name)
    logger.info(
        "milp_solved",
        model=model.name,
        kind=model.kind.value,
        backend=engine.name,
        status=result.status.value,
        objective=result.objective,
        seed=seed,
        runtime=round(result.runtime, 4),
    )
    return result
