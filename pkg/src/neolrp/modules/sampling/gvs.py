"""Generic VRP synthesis on the [0, 1000]^2 grid.

Depot and customer placement, demand schemes and the route-size driven vehicle capacity follow
the categorical axes of the standard CVRP instance generator. Each axis is a list; one value is
drawn per sample so a single dataset can mix configurations.
"""

import math
from collections.abc import Collection, Hashable
from typing import Any

import numpy as np
from pydantic import ValidationError

from neolrp.config import settings
from neolrp.infrastructure.constants import Gvs
from neolrp.infrastructure.exceptions import ConfigError, GenerationStallError
from neolrp.infrastructure.observability import get_logger
from neolrp.modules.instances import VrpCustomer, VrpInstance
from neolrp.modules.sampling.schemas import (
    CustomerPositioning,
    DatasetHeader,
    DemandScheme,
    DepotPositioning,
    GvsParams,
    RouteSizeClass,
    SamplingMethod,
    VrpDataset,
    VrpSample,
)

logger = get_logger(__name__)

_CENTER = Gvs.GRID_SIZE / 2


def _pick[T](rng: np.random.Generator, options: tuple[T, ...]) -> T:
    return options[int(rng.integers(len(options)))]


def place_depot(mode: DepotPositioning, rng: np.random.Generator) -> tuple[float, float]:
    match mode:
        case DepotPositioning.CENTERED:
            return (_CENTER, _CENTER)
        case DepotPositioning.CORNERED:
            return (0.0, 0.0)
        case DepotPositioning.RANDOM:
            x, y = rng.uniform(0.0, Gvs.GRID_SIZE, size=2)
            return (float(x), float(y))


def _uniform_points(count: int, rng: np.random.Generator) -> np.ndarray:
    return rng.uniform(0.0, Gvs.GRID_SIZE, size=(count, 2))


def _clustered_points(count: int, rng: np.random.Generator) -> np.ndarray:
    if count == 0:
        return np.empty((0, 2))
    n_seeds = int(min(count, max(1, rng.poisson(Gvs.CLUSTER_SEED_MEAN))))
    seeds = _uniform_points(n_seeds, rng)
    points = [seeds]
    remaining = count - n_seeds
    while remaining > 0:
        candidates = _uniform_points(max(64, 4 * remaining), rng)
        distances = np.linalg.norm(candidates[:, None, :] - seeds[None, :, :], axis=2)
        attraction = np.minimum(1.0, np.exp(-distances / Gvs.CLUSTER_DECAY).sum(axis=1))
        accepted = candidates[rng.uniform(size=len(candidates)) < attraction][:remaining]
        points.append(accepted)
        remaining -= len(accepted)
    return np.vstack(points)


def place_customers(
    mode: CustomerPositioning, count: int, rng: np.random.Generator
) -> np.ndarray:
    match mode:
        case CustomerPositioning.RANDOM:
            return _uniform_points(count, rng)
        case CustomerPositioning.CLUSTERED:
            return _clustered_points(count, rng)
        case CustomerPositioning.RANDOM_CLUSTERED:
            half = count // 2
            return np.vstack([_uniform_points(count - half, rng), _clustered_points(half, rng)])


def draw_demands(
    scheme: DemandScheme, coords: np.ndarray, rng: np.random.Generator
) -> np.ndarray:
    count = len(coords)
    match scheme:
        case DemandScheme.UNITARY:
            return np.ones(count, dtype=np.int64)
        case DemandScheme.SMALL:
            return rng.integers(1, 11, size=count)
        case DemandScheme.LARGE:
            return rng.integers(50, 101, size=count)
        case DemandScheme.UNIFORM:
            return rng.integers(1, 101, size=count)
        case DemandScheme.QUADRANT:
            # diagonal quadrants around the grid center share a range
            parity = ((coords[:, 0] >= _CENTER).astype(int) + (coords[:, 1] >= _CENTER)) % 2
            small = rng.integers(1, 51, size=count)
            large = rng.integers(51, 101, size=count)
            return np.where(parity == 0, small, large)
        case DemandScheme.SMALL_LARGE:
            share = rng.uniform(*Gvs.SMALL_LARGE_SHARE)
            small = rng.integers(1, 11, size=count)
            large = rng.integers(50, 101, size=count)
            return np.where(rng.uniform(size=count) < share, small, large)


def vehicle_capacity(
    route_size: RouteSizeClass, demands: np.ndarray, rng: np.random.Generator
) -> int:
    r = rng.uniform(*route_size.bounds)
    capacity = math.ceil(r * float(demands.mean()))
    return max(capacity, int(demands.max()))


def generate_vrp(params: GvsParams, rng: np.random.Generator) -> VrpInstance:
    count = int(rng.integers(params.min_customers, params.max_customers + 1))
    depot = place_depot(_pick(rng, params.depot_positioning), rng)
    coords = place_customers(_pick(rng, params.customer_positioning), count, rng)
    demands = draw_demands(_pick(rng, params.demand_scheme), coords, rng)
    capacity = vehicle_capacity(_pick(rng, params.route_size), demands, rng)
    return VrpInstance(
        depot=depot,
        customers=tuple(
            VrpCustomer(x=float(x), y=float(y), demand=int(d))
            for (x, y), d in zip(coords, demands, strict=True)
        ),
        capacity=capacity,
        vehicle_cost=params.vehicle_cost,
        rounding_mode=params.rounding_mode,
    )


def parse_gvs_params(raw: dict[str, Any]) -> GvsParams:
    try:
        return GvsParams.model_validate(raw)
    except ValidationError as e:
        raise ConfigError(
            "invalid GVS generator parameters",
            errors=[
                {"field": ".".join(str(p) for p in err["loc"]), "message": err["msg"]}
                for err in e.errors()
            ],
        ) from e


def gvs_sample(
    params: GvsParams | dict[str, Any],
    n_data: int,
    seed: int,
    *,
    config_hash: str = "",
    attempt_factor: int | None = None,
    exclude: Collection[Hashable] = (),
) -> VrpDataset:
    """`exclude` holds dedup keys that must not be drawn, such as those of a training set."""
    if not isinstance(params, GvsParams):
        params = parse_gvs_params(params)
    budget = (attempt_factor or settings.sampling.attempt_factor) * n_data
    rng = np.random.default_rng(seed)

    samples: list[VrpSample] = []
    seen: set[Hashable] = set(exclude)
    attempts = rejected = 0
    while len(samples) < n_data:
        if rejected >= budget:
            raise GenerationStallError(len(samples), n_data, rejected)
        attempts += 1
        vrp = generate_vrp(params, rng)
        key = vrp.dedup_key()
        if key in seen:
            rejected += 1
            continue
        seen.add(key)
        samples.append(VrpSample(vrp=vrp))

    logger.info(
        "dataset_sampled", method="gvs", n_data=n_data, attempts=attempts, rejected=rejected
    )
    return VrpDataset(
        header=DatasetHeader(
            method=SamplingMethod.GVS,
            seed=seed,
            config_hash=config_hash,
            n_data=n_data,
            attempts=attempts,
            rejected=rejected,
            customer_cap=params.customer_cap,
        ),
        samples=tuple(samples),
    )
