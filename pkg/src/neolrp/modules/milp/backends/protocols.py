from abc import abstractmethod
from enum import StrEnum
from typing import Protocol, runtime_checkable

from pydantic import BaseModel, ConfigDict

from neolrp.modules.milp.model import MilpModel


class SolveStatus(StrEnum):
    OPTIMAL = "optimal"
    FEASIBLE = "feasible"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"
    NOT_SOLVED = "not_solved"

    @property
    def has_solution(self) -> bool:
        return self in (SolveStatus.OPTIMAL, SolveStatus.FEASIBLE)


class MilpSolution(BaseModel):
    """Raw backend answer; `values` is indexed like `MilpModel.variables`."""

    model_config = ConfigDict(frozen=True)

    status: SolveStatus
    objective: float | None = None
    values: tuple[float, ...] = ()
    runtime: float = 0.0


@runtime_checkable
class MilpBackend(Protocol):
    @property
    @abstractmethod
    def name(self) -> str: ...

    @abstractmethod
    def solve(
        self,
        model: MilpModel,
        *,
        time_limit: float,
        mip_gap: float,
        threads: int,
        seed: int | None = None,
    ) -> MilpSolution: ...
