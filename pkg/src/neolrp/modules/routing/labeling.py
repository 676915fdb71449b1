import statistics
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import StrEnum

from pydantic import BaseModel, ConfigDict

from neolrp.config import settings
from neolrp.infrastructure.exceptions import LabelingError
from neolrp.infrastructure.observability import get_logger
from neolrp.infrastructure.seeding import derive_seed
from neolrp.modules.instances import VrpInstance
from neolrp.modules.routing.exact import solve_vrp_exact
from neolrp.modules.routing.heuristic import solve_vrp_heuristic
from neolrp.modules.routing.plan import RoutePlan
from neolrp.modules.sampling import LabelSolver, VrpDataset, VrpSample

logger = get_logger(__name__)


class LabelFallback(StrEnum):
    ERROR = "error"
    HEURISTIC = "heuristic"


@dataclass(frozen=True, slots=True)
class SolverBudget:
    exact_limit: int
    max_iterations: int
    restarts: int

    @classmethod
    def from_settings(
        cls,
        exact_limit: int | None = None,
        max_iterations: int | None = None,
        restarts: int | None = None,
    ) -> "SolverBudget":
        return cls(
            exact_limit=settings.routing.exact_limit if exact_limit is None else exact_limit,
            max_iterations=(
                settings.routing.max_iterations if max_iterations is None else max_iterations
            ),
            restarts=settings.routing.restarts if restarts is None else restarts,
        )


class LabelingStats(BaseModel):
    model_config = ConfigDict(frozen=True)

    solver: LabelSolver
    n_samples: int
    n_exact: int
    n_heuristic: int
    mean_seconds: float
    stdev_seconds: float
    total_seconds: float


def solve_vrp(
    vrp: VrpInstance, solver: LabelSolver, budget: SolverBudget, seed: int
) -> RoutePlan:
    if solver == LabelSolver.EXACT and vrp.size <= budget.exact_limit:
        return solve_vrp_exact(vrp, limit=budget.exact_limit)
    return solve_vrp_heuristic(
        vrp, max_iterations=budget.max_iterations, restarts=budget.restarts, seed=seed
    )


def _label_one(
    args: tuple[VrpInstance, LabelSolver, SolverBudget, int],
) -> tuple[float, LabelSolver, float]:
    vrp, solver, budget, seed = args
    started = time.perf_counter()
    plan = solve_vrp(vrp, solver, budget, seed)
    return plan.cost, plan.solver_tag, time.perf_counter() - started


def label_samples(
    ds: VrpDataset,
    solver: LabelSolver,
    *,
    budget: SolverBudget | None = None,
    fallback: LabelFallback = LabelFallback.ERROR,
    seed: int = 0,
    workers: int | None = None,
) -> tuple[VrpDataset, LabelingStats]:
    budget = budget or SolverBudget.from_settings()
    workers = workers or settings.routing.workers

    empty = [k for k, s in enumerate(ds.samples) if s.vrp.size == 0]
    if empty:
        raise LabelingError("samples without customers cannot be labeled", empty)
    if solver == LabelSolver.EXACT and fallback == LabelFallback.ERROR:
        oversize = [k for k, s in enumerate(ds.samples) if s.vrp.size > budget.exact_limit]
        if oversize:
            raise LabelingError(
                f"{len(oversize)} samples exceed the exact solver limit {budget.exact_limit}",
                oversize,
            )

    jobs = [(s.vrp, solver, budget, derive_seed(seed, k)) for k, s in enumerate(ds.samples)]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunksize = max(1, len(jobs) // (4 * workers))
            results = list(pool.map(_label_one, jobs, chunksize=chunksize))
    else:
        results = [_label_one(job) for job in jobs]

    samples = tuple(
        VrpSample(vrp=s.vrp, label=cost, label_solver=tag)
        for s, (cost, tag, _) in zip(ds.samples, results, strict=True)
    )
    timings = [seconds for _, _, seconds in results]
    stats = LabelingStats(
        solver=solver,
        n_samples=len(samples),
        n_exact=sum(1 for s in samples if s.label_solver == LabelSolver.EXACT),
        n_heuristic=sum(1 for s in samples if s.label_solver == LabelSolver.HEURISTIC),
        mean_seconds=statistics.fmean(timings) if timings else 0.0,
        stdev_seconds=statistics.pstdev(timings) if timings else 0.0,
        total_seconds=sum(timings),
    )
    logger.info(
        "dataset_labeled",
        solver=solver.value,
        samples=stats.n_samples,
        exact=stats.n_exact,
        heuristic=stats.n_heuristic,
        mean_seconds=round(stats.mean_seconds, 6),
    )
    labeled = VrpDataset(
        header=ds.header.model_copy(update={"labeler": solver}),
        samples=samples,
    )
    return labeled, stats


def label_dataset(
    ds: VrpDataset,
    solver: LabelSolver,
    *,
    budget: SolverBudget | None = None,
    fallback: LabelFallback = LabelFallback.ERROR,
    seed: int = 0,
    workers: int | None = None,
) -> VrpDataset:
    labeled, _ = label_samples(
        ds, solver, budget=budget, fallback=fallback, seed=seed, workers=workers
    )
    return labeled
