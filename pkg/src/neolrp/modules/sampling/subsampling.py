from collections.abc import Callable, Collection, Hashable, Sequence

import numpy as np

from neolrp.config import settings
from neolrp.infrastructure.exceptions import GenerationStallError, InvalidInstanceError
from neolrp.infrastructure.observability import get_logger
from neolrp.modules.instances import ClrpInstance, arc_cost
from neolrp.modules.sampling.schemas import DatasetHeader, SamplingMethod, VrpDataset, VrpSample

logger = get_logger(__name__)

# (instance, customer indices, rng) -> depot index or None to reject
DepotChooser = Callable[[ClrpInstance, Sequence[int], np.random.Generator], int | None]


def _choose_random_depot(
    inst: ClrpInstance, subset: Sequence[int], rng: np.random.Generator
) -> int | None:
    depot = int(rng.integers(inst.n_depots))
    total = sum(inst.customers[j].demand for j in subset)
    return depot if total <= inst.depots[depot].capacity else None


def nearest_feasible_depot(inst: ClrpInstance, subset: Sequence[int]) -> int | None:
    total = sum(inst.customers[j].demand for j in subset)
    best: tuple[float, int] | None = None
    for i, depot in enumerate(inst.depots):
        if depot.capacity < total:
            continue
        distance = sum(
            arc_cost(depot.coord, inst.customers[j].coord, inst.rounding_mode) for j in subset
        )
        if best is None or (distance, i) < best:
            best = (distance, i)
    return None if best is None else best[1]


def _choose_nearest_depot(
    inst: ClrpInstance, subset: Sequence[int], _rng: np.random.Generator
) -> int | None:
    return nearest_feasible_depot(inst, subset)


def _check_sources(sources: Sequence[ClrpInstance]) -> None:
    if not sources:
        raise InvalidInstanceError("subsampling needs at least one source instance")
    empty = [s.name for s in sources if s.n_customers == 0]
    if empty:
        raise InvalidInstanceError(
            "source instances must have customers", details={"instances": empty}
        )


def _subsample(
    method: SamplingMethod,
    sources: Sequence[ClrpInstance],
    n_data: int,
    seed: int,
    choose_depot: DepotChooser,
    config_hash: str,
    attempt_factor: int | None,
    exclude: Collection[Hashable],
) -> VrpDataset:
    _check_sources(sources)
    budget = (attempt_factor or settings.sampling.attempt_factor) * n_data
    rng = np.random.default_rng(seed)

    samples: list[VrpSample] = []
    seen: set[Hashable] = set(exclude)
    attempts = rejected = 0

    while len(samples) < n_data:
        if rejected >= budget:
            raise GenerationStallError(len(samples), n_data, rejected)
        attempts += 1

        inst = sources[int(rng.integers(len(sources)))]
        size = int(rng.integers(1, inst.n_customers + 1))
        subset = sorted(int(j) for j in rng.choice(inst.n_customers, size=size, replace=False))
        depot = choose_depot(inst, subset, rng)
        if depot is None:
            rejected += 1
            continue

        vrp = inst.induced_vrp(depot, subset)
        key = vrp.dedup_key()
        if key in seen:
            rejected += 1
            continue
        seen.add(key)
        samples.append(VrpSample(vrp=vrp))

    logger.info(
        "dataset_sampled",
        method=method.value,
        n_data=n_data,
        attempts=attempts,
        rejected=rejected,
    )
    return VrpDataset(
        header=DatasetHeader(
            method=method,
            seed=seed,
            config_hash=config_hash,
            n_data=n_data,
            attempts=attempts,
            rejected=rejected,
            sources=tuple(s.name for s in sources),
        ),
        samples=tuple(samples),
    )


def rscc_sample(
    sources: Sequence[ClrpInstance],
    n_data: int,
    seed: int,
    *,
    config_hash: str = "",
    attempt_factor: int | None = None,
    exclude: Collection[Hashable] = (),
) -> VrpDataset:
    return _subsample(
        SamplingMethod.RSCC,
        sources,
        n_data,
        seed,
        _choose_random_depot,
        config_hash,
        attempt_factor,
        exclude,
    )


def pscc_sample(
    sources: Sequence[ClrpInstance],
    n_data: int,
    seed: int,
    *,
    config_hash: str = "",
    attempt_factor: int | None = None,
    exclude: Collection[Hashable] = (),
) -> VrpDataset:
    return _subsample(
        SamplingMethod.PSCC,
        sources,
        n_data,
        seed,
        _choose_nearest_depot,
        config_hash,
        attempt_factor,
        exclude,
    )
