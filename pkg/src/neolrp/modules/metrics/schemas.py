import statistics
from enum import StrEnum

from pydantic import BaseModel, ConfigDict, Field, computed_field


class Method(StrEnum):
    NEO_LRP = "NEO-LRP"
    FLP_VRP = "FLP-VRP"


class RunRecord(BaseModel):
    model_config = ConfigDict(frozen=True)

    seed: int
    status: str
    objective: float
    gap: float = Field(..., ge=0)
    pred_error: float | None = Field(None, ge=0)
    t_la: float = Field(..., ge=0)
    t_total: float = Field(..., ge=0)


class InstanceRow(BaseModel):
    """All runs of one method on one instance; the headline gap is the mean over runs."""

    model_config = ConfigDict(frozen=True)

    instance: str
    method: Method
    n_customers: int
    bks: float
    runs: tuple[RunRecord, ...] = Field(..., min_length=1)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def mean_gap(self) -> float:
        return statistics.fmean(r.gap for r in self.runs)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def best_gap(self) -> float:
        return min(r.gap for r in self.runs)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def best_objective(self) -> float:
        return min(r.objective for r in self.runs)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def mean_pred_error(self) -> float | None:
        values = [r.pred_error for r in self.runs if r.pred_error is not None]
        return statistics.fmean(values) if values else None

    @computed_field  # type: ignore[prop-decorator]
    @property
    def mean_t_la(self) -> float:
        return statistics.fmean(r.t_la for r in self.runs)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def mean_t_total(self) -> float:
        return statistics.fmean(r.t_total for r in self.runs)


class SizeAggregate(BaseModel):
    model_config = ConfigDict(frozen=True)

    method: Method
    n_customers: int
    count: int
    mean_gap: float
    median_gap: float
    mean_pred_error: float | None = None
    median_pred_error: float | None = None
    mean_t_la: float
    mean_t_total: float


class EvaluationReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    rows: tuple[InstanceRow, ...] = ()
    aggregates: tuple[SizeAggregate, ...] = ()
