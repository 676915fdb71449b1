from enum import StrEnum
from typing import Any, Self

from pydantic import BaseModel, ConfigDict, Field, PositiveInt, model_validator

from neolrp.infrastructure.constants import Gvs
from neolrp.modules.instances import RoundingMode, VrpInstance


class SamplingMethod(StrEnum):
    GVS = "gvs"
    RSCC = "rscc"
    PSCC = "pscc"


class DepotPositioning(StrEnum):
    RANDOM = "random"
    CENTERED = "centered"
    CORNERED = "cornered"


class CustomerPositioning(StrEnum):
    RANDOM = "random"
    CLUSTERED = "clustered"
    RANDOM_CLUSTERED = "random_clustered"


class DemandScheme(StrEnum):
    UNITARY = "unitary"
    SMALL = "small"
    LARGE = "large"
    QUADRANT = "quadrant"
    UNIFORM = "uniform"
    SMALL_LARGE = "small_large"


class RouteSizeClass(StrEnum):
    VERY_SHORT = "very_short"
    SHORT = "short"
    MEDIUM = "medium"
    LONG = "long"
    VERY_LONG = "very_long"
    ULTRA_LONG = "ultra_long"

    @property
    def bounds(self) -> tuple[float, float]:
        return Gvs.ROUTE_SIZE_RANGES[self.value]


class LabelSolver(StrEnum):
    EXACT = "exact"
    HEURISTIC = "heuristic"


class GvsParams(BaseModel):
    """Generator axes; each list is drawn from uniformly per sample."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    min_customers: PositiveInt = 1
    max_customers: PositiveInt = Gvs.MAX_CUSTOMERS
    customer_cap: PositiveInt = Gvs.MAX_CUSTOMERS
    depot_positioning: tuple[DepotPositioning, ...] = Field(
        (DepotPositioning.RANDOM,), min_length=1
    )
    customer_positioning: tuple[CustomerPositioning, ...] = Field(
        (CustomerPositioning.RANDOM,), min_length=1
    )
    demand_scheme: tuple[DemandScheme, ...] = Field((DemandScheme.UNIFORM,), min_length=1)
    route_size: tuple[RouteSizeClass, ...] = Field((RouteSizeClass.MEDIUM,), min_length=1)
    vehicle_cost: float = Field(0.0, ge=0)
    rounding_mode: RoundingMode = RoundingMode.RAW

    @model_validator(mode="after")
    def validate_customer_range(self) -> Self:
        if self.min_customers > self.max_customers:
            raise ValueError("min_customers must not exceed max_customers")
        if self.max_customers > self.customer_cap:
            raise ValueError(f"max_customers is capped at {self.customer_cap}")
        return self


class VrpSample(BaseModel):
    model_config = ConfigDict(frozen=True)

    vrp: VrpInstance
    label: float | None = None
    label_solver: LabelSolver | None = None

    @property
    def labeled(self) -> bool:
        return self.label is not None

    def to_record(self) -> dict[str, Any]:
        vrp = self.vrp
        return {
            "depot": [vrp.depot[0], vrp.depot[1]],
            "customers": [[c.x, c.y, c.demand] for c in vrp.customers],
            "Q": vrp.capacity,
            "F": vrp.vehicle_cost,
            "rounding": vrp.rounding_mode.value,
            "label": self.label,
            "label_solver": self.label_solver.value if self.label_solver else None,
        }

    @classmethod
    def from_record(cls, record: dict[str, Any]) -> Self:
        return cls.model_validate(
            {
                "vrp": {
                    "depot": tuple(record["depot"]),
                    "customers": [
                        {"x": x, "y": y, "demand": d} for x, y, d in record["customers"]
                    ],
                    "capacity": record["Q"],
                    "vehicle_cost": record["F"],
                    "rounding_mode": record["rounding"],
                },
                "label": record.get("label"),
                "label_solver": record.get("label_solver"),
            }
        )


class DatasetHeader(BaseModel):
    model_config = ConfigDict(frozen=True)

    method: SamplingMethod
    seed: int
    config_hash: str
    n_data: int
    attempts: int = 0
    rejected: int = 0
    sources: tuple[str, ...] = ()
    customer_cap: int | None = None
    labeler: LabelSolver | None = None


class VrpDataset(BaseModel):
    model_config = ConfigDict(frozen=True)

    header: DatasetHeader
    samples: tuple[VrpSample, ...] = ()

    def __len__(self) -> int:
        return len(self.samples)

    @property
    def labeled(self) -> bool:
        return bool(self.samples) and all(s.labeled for s in self.samples)


class SamplingConfig(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    method: SamplingMethod = SamplingMethod.RSCC
    n_data: PositiveInt = 1000
    n_test: int = Field(0, ge=0)
    seed: int = 0
    gvs: GvsParams | None = None

    @model_validator(mode="after")
    def validate_method_inputs(self) -> Self:
        if self.method == SamplingMethod.GVS and self.gvs is None:
            raise ValueError("GVS sampling needs generator parameters under [sampling.gvs]")
        return self
