from collections.abc import Sequence
from dataclasses import dataclass
from enum import StrEnum
from typing import Self

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, NonNegativeFloat, PositiveInt, model_validator

Point = tuple[float, float]


class RoundingMode(StrEnum):
    RAW = "raw"
    PRODHON100 = "prodhon100"


class Depot(BaseModel):
    model_config = ConfigDict(frozen=True)

    id: int
    x: float
    y: float
    capacity: PositiveInt
    fixed_cost: NonNegativeFloat = 0.0

    @property
    def coord(self) -> Point:
        return (self.x, self.y)


class Customer(BaseModel):
    model_config = ConfigDict(frozen=True)

    id: int
    x: float
    y: float
    demand: PositiveInt

    @property
    def coord(self) -> Point:
        return (self.x, self.y)


class ClrpInstance(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str = ""
    depots: tuple[Depot, ...] = Field(..., min_length=1)
    customers: tuple[Customer, ...] = ()
    vehicle_capacity: PositiveInt
    vehicle_fixed_cost: NonNegativeFloat = 0.0
    rounding_mode: RoundingMode = RoundingMode.RAW

    @model_validator(mode="after")
    def validate_instance(self) -> Self:
        depot_ids = [d.id for d in self.depots]
        customer_ids = [c.id for c in self.customers]
        if len(set(depot_ids)) != len(depot_ids):
            raise ValueError("depot ids must be unique")
        if len(set(customer_ids)) != len(customer_ids):
            raise ValueError("customer ids must be unique")
        if set(depot_ids) & set(customer_ids):
            raise ValueError("depot and customer id sets must be disjoint")
        oversized = [c.id for c in self.customers if c.demand > self.vehicle_capacity]
        if oversized:
            raise ValueError(f"customers {oversized} exceed vehicle capacity")
        return self

    @property
    def n_customers(self) -> int:
        return len(self.customers)

    @property
    def n_depots(self) -> int:
        return len(self.depots)

    def depot_index(self, depot_id: int) -> int:
        for index, depot in enumerate(self.depots):
            if depot.id == depot_id:
                return index
        raise KeyError(depot_id)

    def customer_index(self, customer_id: int) -> int:
        for index, customer in enumerate(self.customers):
            if customer.id == customer_id:
                return index
        raise KeyError(customer_id)

    def depot_by_id(self, depot_id: int) -> Depot:
        return self.depots[self.depot_index(depot_id)]

    def customer_by_id(self, customer_id: int) -> Customer:
        return self.customers[self.customer_index(customer_id)]

    def induced_vrp(self, depot_index: int, customer_indices: Sequence[int]) -> "VrpInstance":
        depot = self.depots[depot_index]
        return VrpInstance(
            depot=depot.coord,
            customers=tuple(
                VrpCustomer(
                    x=self.customers[j].x,
                    y=self.customers[j].y,
                    demand=self.customers[j].demand,
                )
                for j in customer_indices
            ),
            capacity=self.vehicle_capacity,
            vehicle_cost=self.vehicle_fixed_cost,
            rounding_mode=self.rounding_mode,
        )


class VrpCustomer(BaseModel):
    model_config = ConfigDict(frozen=True)

    x: float
    y: float
    demand: PositiveInt

    def key(self) -> tuple[float, float, int]:
        return (self.x, self.y, self.demand)


class VrpInstance(BaseModel):
    model_config = ConfigDict(frozen=True)

    depot: Point
    customers: tuple[VrpCustomer, ...] = ()
    capacity: int
    vehicle_cost: NonNegativeFloat = 0.0
    rounding_mode: RoundingMode = RoundingMode.RAW

    @model_validator(mode="after")
    def validate_demands(self) -> Self:
        if any(c.demand > self.capacity for c in self.customers):
            raise ValueError("customer demand exceeds vehicle capacity")
        return self

    @property
    def size(self) -> int:
        return len(self.customers)

    @property
    def total_demand(self) -> int:
        return sum(c.demand for c in self.customers)

    def dedup_key(self) -> tuple[Point, tuple[tuple[float, float, int], ...]]:
        return (self.depot, tuple(sorted(c.key() for c in self.customers)))


@dataclass(frozen=True, slots=True)
class NormalizedFeatures:
    sigma: np.ndarray
    scale: float

    def __len__(self) -> int:
        return int(self.sigma.shape[0])


class ClrpSolution(BaseModel):
    model_config = ConfigDict(frozen=True)

    open_depots: tuple[int, ...] = ()
    allocation: dict[int, tuple[int, ...]] = Field(default_factory=dict)
    routes: dict[int, tuple[tuple[int, ...], ...]] = Field(default_factory=dict)
    total_cost: float = 0.0

    @property
    def n_routes(self) -> int:
        return sum(len(r) for r in self.routes.values())


class LocationAllocation(BaseModel):
    """Binary location-allocation decision (y per depot, x per depot/customer), by index."""

    model_config = ConfigDict(frozen=True)

    y: tuple[int, ...]
    x: tuple[tuple[int, ...], ...]

    @classmethod
    def from_depot_choice(
        cls,
        n_depots: int,
        depot_of: Sequence[int],
        extra_open: Sequence[int] = (),
    ) -> Self:
        x = [[0] * len(depot_of) for _ in range(n_depots)]
        for j, i in enumerate(depot_of):
            x[i][j] = 1
        open_set = set(depot_of) | set(extra_open)
        return cls(
            y=tuple(1 if i in open_set else 0 for i in range(n_depots)),
            x=tuple(tuple(row) for row in x),
        )

    @property
    def open_indices(self) -> list[int]:
        return [i for i, value in enumerate(self.y) if value]

    def customers_of(self, depot_index: int) -> list[int]:
        return [j for j, value in enumerate(self.x[depot_index]) if value]
