from typing import Literal, Self

from pydantic import Field, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from neolrp.infrastructure.constants import Milp, Routing, Sampling


class SolverSettings(BaseSettings):
    model_config = SettingsConfigDict(env_prefix="SOLVER_")

    backend: str = "pulp"
    engine: str = "PULP_CBC_CMD"
    time_limit: float = Field(Milp.DEFAULT_TIME_LIMIT, gt=0)
    mip_gap: float = Field(Milp.DEFAULT_MIP_GAP, ge=0)
    threads: int = Field(1, ge=1)


class RoutingSettings(BaseSettings):
    model_config = SettingsConfigDict(env_prefix="ROUTING_")

    exact_limit: int = Field(Routing.EXACT_LIMIT, ge=1)
    max_iterations: int = Field(Routing.MAX_ITERATIONS, ge=0)
    restarts: int = Field(Routing.RESTARTS, ge=0)
    workers: int = Field(1, ge=1)


class TrainingSettings(BaseSettings):
    model_config = SettingsConfigDict(env_prefix="TRAINING_")

    torch_threads: int = Field(1, ge=1)
    workers: int = Field(1, ge=1)


class SamplingSettings(BaseSettings):
    model_config = SettingsConfigDict(env_prefix="SAMPLING_")

    attempt_factor: int = Field(Sampling.ATTEMPT_FACTOR, ge=1)


class LoggingSettings(BaseSettings):
    model_config = SettingsConfigDict(env_prefix="LOG_")

    level: str = "INFO"
    json_format: bool = False


class AppSettings(BaseSettings):
    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    name: str = Field("neolrp", alias="APP_NAME")
    version: str = Field("0.1.0", alias="APP_VERSION")
    env: Literal["development", "benchmark", "test"] = Field("development", alias="APP_ENV")

    solver: SolverSettings = Field(default_factory=SolverSettings)
    routing: RoutingSettings = Field(default_factory=RoutingSettings)
    training: TrainingSettings = Field(default_factory=TrainingSettings)
    sampling: SamplingSettings = Field(default_factory=SamplingSettings)
    logging: LoggingSettings = Field(default_factory=LoggingSettings)

    @property
    def is_benchmark(self) -> bool:
        return self.env == "benchmark"

    @model_validator(mode="after")
    def validate_benchmark_settings(self) -> Self:
        """Benchmark runs must be reproducible, which rules out multi-threaded solvers."""
        if self.env == "benchmark" and self.solver.threads != 1:
            raise ValueError("SOLVER_THREADS must be 1 when APP_ENV=benchmark")
        return self
