from neolrp.infrastructure.exceptions.base import ErrorDetail, NeoLrpError
from neolrp.infrastructure.exceptions.domain import (
    BackendError,
    ConfigError,
    ConstructionError,
    GenerationStallError,
    InvalidInstanceError,
    LabelingError,
    MetricError,
    ParseError,
    ShapeError,
    SizeLimitError,
    SolutionValidationError,
    StageError,
    TrainingError,
)

__all__ = [
    "BackendError",
    "ConfigError",
    "ConstructionError",
    "ErrorDetail",
    "GenerationStallError",
    "InvalidInstanceError",
    "LabelingError",
    "MetricError",
    "NeoLrpError",
    "ParseError",
    "ShapeError",
    "SizeLimitError",
    "SolutionValidationError",
    "StageError",
    "TrainingError",
]
