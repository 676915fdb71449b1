from enum import IntEnum, StrEnum


class ErrorType(StrEnum):
    PARSE = "/errors/parse"
    INVALID_INSTANCE = "/errors/invalid-instance"
    INFEASIBLE_SOLUTION = "/errors/infeasible-solution"
    CONFIG = "/errors/config"
    GENERATION_STALL = "/errors/generation-stall"
    SIZE_LIMIT = "/errors/size-limit"
    LABELING = "/errors/labeling"
    TRAINING = "/errors/training"
    SHAPE = "/errors/shape"
    CONSTRUCTION = "/errors/construction"
    BACKEND = "/errors/backend"
    METRIC = "/errors/metric"
    STAGE = "/errors/stage"


class ExitCode(IntEnum):
    OK = 0
    FAILURE = 1
    USAGE = 2
    INPUT = 3
    COMPUTATION = 4


ERROR_TITLES: dict[ErrorType, str] = {
    ErrorType.PARSE: "Parse Error",
    ErrorType.INVALID_INSTANCE: "Invalid Instance",
    ErrorType.INFEASIBLE_SOLUTION: "Infeasible Solution",
    ErrorType.CONFIG: "Configuration Error",
    ErrorType.GENERATION_STALL: "Generation Stalled",
    ErrorType.SIZE_LIMIT: "Size Limit Exceeded",
    ErrorType.LABELING: "Labeling Error",
    ErrorType.TRAINING: "Training Error",
    ErrorType.SHAPE: "Shape Mismatch",
    ErrorType.CONSTRUCTION: "Model Construction Error",
    ErrorType.BACKEND: "Solver Backend Error",
    ErrorType.METRIC: "Metric Error",
    ErrorType.STAGE: "Stage Error",
}
