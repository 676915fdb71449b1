from pydantic import BaseModel, ConfigDict

from neolrp.infrastructure.exceptions import MetricError
from neolrp.infrastructure.observability import get_logger
from neolrp.modules.sampling import VrpDataset
from neolrp.modules.surrogate.model import SurrogateModel
from neolrp.modules.surrogate.predict import predict

logger = get_logger(__name__)


class MapeResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    mape: float
    evaluated: int
    excluded: int


def evaluate_mape(model: SurrogateModel, ds: VrpDataset) -> MapeResult:
    errors: list[float] = []
    excluded = 0
    for sample in ds.samples:
        if sample.label is None:
            raise MetricError("MAPE needs a labeled dataset")
        if sample.label <= 0:
            excluded += 1
            continue
        errors.append(abs(sample.label - predict(model, sample.vrp)) / sample.label)

    if excluded:
        logger.warning("mape_labels_excluded", excluded=excluded)
    if not errors:
        raise MetricError("no sample with a positive label to evaluate")
    return MapeResult(
        mape=100.0 * sum(errors) / len(errors), evaluated=len(errors), excluded=excluded
    )
