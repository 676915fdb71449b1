from pydantic import BaseModel, ConfigDict

from neolrp.modules.instances import LocationAllocation
from neolrp.modules.milp import SolveStatus
from neolrp.modules.pipeline.config import AblationAxis, SolveMode
from neolrp.modules.surrogate import MapeResult, TrialRecord


class TrainingSummary(BaseModel):
    model_config = ConfigDict(frozen=True)

    group: str
    best_trial: int
    trials: tuple[TrialRecord, ...]
    e_test: MapeResult | None = None


class SolveRecord(BaseModel):
    """Location-allocation decision of one run; timings live in the provenance sidecar."""

    model_config = ConfigDict(frozen=True)

    instance: str
    mode: SolveMode
    run: int
    seed: int
    status: SolveStatus
    objective: float | None = None
    allocation: LocationAllocation | None = None
    gamma: dict[int, float] = {}


class LabelGapSummary(BaseModel):
    model_config = ConfigDict(frozen=True)

    compared: int
    median: float
    mean: float
    share_below_threshold: float
    threshold: float


class AblationCell(BaseModel):
    model_config = ConfigDict(frozen=True)

    value: str
    rows: int
    median_gap: float | None = None
    median_pred_error: float | None = None
    e_test: float | None = None


class AblationReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    axis: AblationAxis
    cells: tuple[AblationCell, ...]
    label_gap: LabelGapSummary | None = None
