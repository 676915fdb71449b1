from collections.abc import Sequence
from pathlib import Path
from typing import Any

from neolrp.infrastructure.constants import ErrorType, ExitCode
from neolrp.infrastructure.exceptions.base import NeoLrpError


class ParseError(NeoLrpError):
    def __init__(self, message: str, line: int | None, section: str) -> None:
        where = f"line {line}" if line is not None else "end of input"
        super().__init__(
            message=f"{message} ({section}, {where})",
            error_type=ErrorType.PARSE,
            exit_code=ExitCode.INPUT,
            details={"line": line, "section": section},
        )
        self.line = line
        self.section = section


class InvalidInstanceError(NeoLrpError):
    def __init__(self, message: str, details: dict[str, Any] | None = None) -> None:
        super().__init__(
            message=message,
            error_type=ErrorType.INVALID_INSTANCE,
            exit_code=ExitCode.INPUT,
            details=details,
        )


class SolutionValidationError(NeoLrpError):
    def __init__(self, message: str, violations: Sequence[Any]) -> None:
        super().__init__(
            message=message,
            error_type=ErrorType.INFEASIBLE_SOLUTION,
            exit_code=ExitCode.COMPUTATION,
            errors=[
                v.model_dump(mode="json") if hasattr(v, "model_dump") else {"message": str(v)}
                for v in violations
            ],
        )
        self.violations = list(violations)


class ConfigError(NeoLrpError):
    def __init__(self, message: str, errors: list[dict[str, Any]] | None = None) -> None:
        super().__init__(
            message=message,
            error_type=ErrorType.CONFIG,
            exit_code=ExitCode.USAGE,
            errors=errors,
        )


class GenerationStallError(NeoLrpError):
    def __init__(self, produced: int, requested: int, rejected: int) -> None:
        super().__init__(
            message=(
                f"sampling stalled after {rejected} rejected draws "
                f"({produced} of {requested} samples produced)"
            ),
            error_type=ErrorType.GENERATION_STALL,
            exit_code=ExitCode.COMPUTATION,
            details={"produced": produced, "requested": requested, "rejected": rejected},
        )


class SizeLimitError(NeoLrpError):
    def __init__(self, size: int, limit: int) -> None:
        super().__init__(
            message=f"instance has {size} customers, exact solver limit is {limit}",
            error_type=ErrorType.SIZE_LIMIT,
            exit_code=ExitCode.COMPUTATION,
            details={"size": size, "limit": limit},
        )


class LabelingError(NeoLrpError):
    def __init__(self, message: str, sample_ids: Sequence[int]) -> None:
        super().__init__(
            message=message,
            error_type=ErrorType.LABELING,
            exit_code=ExitCode.COMPUTATION,
            details={"sample_ids": list(sample_ids)},
        )
        self.sample_ids = list(sample_ids)


class TrainingError(NeoLrpError):
    def __init__(self, message: str) -> None:
        super().__init__(
            message=message,
            error_type=ErrorType.TRAINING,
            exit_code=ExitCode.INPUT,
        )


class ShapeError(NeoLrpError):
    def __init__(self, expected: int, actual: int, where: str) -> None:
        super().__init__(
            message=f"{where}: expected width {expected}, got {actual}",
            error_type=ErrorType.SHAPE,
            exit_code=ExitCode.INPUT,
            details={"expected": expected, "actual": actual, "where": where},
        )


class ConstructionError(NeoLrpError):
    def __init__(self, message: str, details: dict[str, Any] | None = None) -> None:
        super().__init__(
            message=message,
            error_type=ErrorType.CONSTRUCTION,
            exit_code=ExitCode.COMPUTATION,
            details=details,
        )


class BackendError(NeoLrpError):
    def __init__(self, backend: str, message: str, diagnostics: str | None = None) -> None:
        super().__init__(
            message=f"{backend}: {message}",
            error_type=ErrorType.BACKEND,
            exit_code=ExitCode.COMPUTATION,
            details={"backend": backend, "diagnostics": diagnostics},
        )


class MetricError(NeoLrpError):
    def __init__(self, message: str) -> None:
        super().__init__(
            message=message,
            error_type=ErrorType.METRIC,
            exit_code=ExitCode.COMPUTATION,
        )


class StageError(NeoLrpError):
    def __init__(self, stage: str, message: str, path: Path | None = None) -> None:
        super().__init__(
            message=f"{stage}: {message}",
            error_type=ErrorType.STAGE,
            exit_code=ExitCode.INPUT,
            details={"stage": stage, "path": str(path) if path else None},
        )
