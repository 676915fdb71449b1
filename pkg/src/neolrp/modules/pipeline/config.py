import json
import tomllib
from enum import StrEnum
from pathlib import Path
from typing import Any, Self

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    NonNegativeInt,
    PositiveInt,
    ValidationError,
    model_validator,
)

from neolrp.infrastructure.constants import Hyperparams
from neolrp.infrastructure.exceptions import ConfigError, ParseError
from neolrp.infrastructure.files import read_text
from neolrp.infrastructure.hashing import config_hash
from neolrp.infrastructure.seeding import derive_seed
from neolrp.modules.instances import instance_name
from neolrp.modules.milp import SideConstraints
from neolrp.modules.routing import LabelFallback, SolverBudget
from neolrp.modules.sampling import LabelSolver, SamplingConfig, SamplingMethod
from neolrp.modules.surrogate import HyperparamSpace


class SurrogateMode(StrEnum):
    SINGLE = "single"
    CUSTOMIZED = "customized"


class SolveMode(StrEnum):
    NEO = "neo"
    FLP = "flp"


class AblationAxis(StrEnum):
    SAMPLING = "sampling"
    SAMPLE_SIZE = "sample_size"
    LABELER = "labeler"
    SURROGATE_MODE = "surrogate_mode"


class LabelingConfig(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    solver: LabelSolver = LabelSolver.HEURISTIC
    fallback: LabelFallback = LabelFallback.HEURISTIC
    exact_limit: PositiveInt | None = None
    max_iterations: NonNegativeInt | None = None
    restarts: NonNegativeInt | None = None
    workers: PositiveInt | None = None

    def budget(self) -> SolverBudget:
        return SolverBudget.from_settings(self.exact_limit, self.max_iterations, self.restarts)


class TrainingConfig(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    trials: PositiveInt = Hyperparams.DEFAULT_TRIALS
    space: HyperparamSpace = Field(default_factory=HyperparamSpace)
    workers: PositiveInt | None = None


class SolverConfig(BaseModel):
    """Per-experiment overrides of the SOLVER_* settings."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    backend: str | None = None
    time_limit: float | None = Field(None, gt=0)
    mip_gap: float | None = Field(None, ge=0)
    threads: PositiveInt | None = None


class AblationConfig(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    axis: AblationAxis
    values: tuple[str | int, ...] = Field(..., min_length=1)

    @model_validator(mode="after")
    def validate_values(self) -> Self:
        allowed: dict[AblationAxis, type[StrEnum]] = {
            AblationAxis.SAMPLING: SamplingMethod,
            AblationAxis.LABELER: LabelSolver,
            AblationAxis.SURROGATE_MODE: SurrogateMode,
        }
        if self.axis == AblationAxis.SAMPLE_SIZE:
            if not all(isinstance(v, int) and v > 0 for v in self.values):
                raise ValueError("sample_size values must be positive integers")
        else:
            enum = allowed[self.axis]
            unknown = [v for v in self.values if str(v) not in {e.value for e in enum}]
            if unknown:
                raise ValueError(f"unknown {self.axis.value} values {unknown}")
        if len(set(self.values)) != len(self.values):
            raise ValueError("ablation values must be distinct")
        return self


class InstanceGroup(BaseModel):
    """Instances that share one training dataset and one surrogate."""

    model_config = ConfigDict(frozen=True)

    name: str
    instances: tuple[Path, ...]
    seed: int


class ExperimentConfig(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    name: str = Field(..., min_length=1, pattern=r"^[A-Za-z0-9_.-]+$")
    seed: int = 0
    instances: tuple[Path, ...] = Field(..., min_length=1)
    sampling: SamplingConfig = Field(default_factory=SamplingConfig)
    labeling: LabelingConfig = Field(default_factory=LabelingConfig)
    training: TrainingConfig = Field(default_factory=TrainingConfig)
    solver: SolverConfig = Field(default_factory=SolverConfig)
    surrogate_mode: SurrogateMode = SurrogateMode.SINGLE
    modes: tuple[SolveMode, ...] = Field((SolveMode.NEO,), min_length=1)
    runs: PositiveInt = 5
    output_dir: Path = Path("results")
    side_constraints: dict[str, SideConstraints] = Field(default_factory=dict)
    ablation: AblationConfig | None = None

    @model_validator(mode="after")
    def validate_references(self) -> Self:
        missing = [str(p) for p in self.instances if not p.is_file()]
        if missing:
            raise ValueError(f"instance files not found: {missing}")
        names = [instance_name(p) for p in self.instances]
        if len(set(names)) != len(names):
            raise ValueError("instance names must be unique")
        unknown = sorted(set(self.side_constraints) - set(names))
        if unknown:
            raise ValueError(f"side constraints for unknown instances {unknown}")
        return self

    @property
    def instance_names(self) -> list[str]:
        return [instance_name(p) for p in self.instances]

    @property
    def hash(self) -> str:
        """Location independent: instances by name, output directory left out."""
        payload = self.model_dump(mode="json", exclude={"output_dir"})
        payload["instances"] = self.instance_names
        return config_hash(payload)

    @property
    def root(self) -> Path:
        return self.output_dir / self.name

    def with_seed(self, seed: int) -> Self:
        return self.model_copy(update={"seed": seed})

    def with_output_dir(self, output_dir: Path) -> Self:
        return self.model_copy(update={"output_dir": output_dir})

    def sampling_for(self, group: InstanceGroup) -> SamplingConfig:
        return self.sampling.model_copy(update={"seed": group.seed})

    def groups(self) -> list[InstanceGroup]:
        if self.surrogate_mode == SurrogateMode.SINGLE:
            return [InstanceGroup(name="all", instances=self.instances, seed=self.seed)]
        return [
            InstanceGroup(
                name=instance_name(path), instances=(path,), seed=derive_seed(self.seed, k)
            )
            for k, path in enumerate(self.instances)
        ]

    def group_of(self, name: str) -> InstanceGroup:
        for group in self.groups():
            if any(instance_name(p) == name for p in group.instances):
                return group
        raise KeyError(name)


def _resolve_paths(raw: dict[str, Any], base: Path) -> dict[str, Any]:
    resolved = dict(raw)
    if "instances" in resolved:
        resolved["instances"] = [str(base / p) for p in resolved["instances"]]
    if "output_dir" in resolved:
        resolved["output_dir"] = str(base / resolved["output_dir"])
    return resolved


def parse_experiment(raw: dict[str, Any], base: Path | None = None) -> ExperimentConfig:
    try:
        return ExperimentConfig.model_validate(_resolve_paths(raw, base) if base else raw)
    except ValidationError as e:
        errors = [
            {"field": ".".join(str(p) for p in err["loc"]), "message": err["msg"]}
            for err in e.errors()
        ]
        raise ConfigError("invalid experiment configuration", errors=errors) from e


def load_experiment(path: Path) -> ExperimentConfig:
    """Reads a TOML or JSON experiment file; relative paths resolve against its directory."""
    if not path.is_file():
        raise ConfigError(f"experiment file not found: {path}")
    try:
        text = read_text(path, "experiment file")
    except ParseError as e:
        raise ConfigError(e.message) from e
    try:
        raw = json.loads(text) if path.suffix == ".json" else tomllib.loads(text)
    except (json.JSONDecodeError, tomllib.TOMLDecodeError) as e:
        raise ConfigError(f"cannot parse {path.name}: {e}") from e
    return parse_experiment(raw, path.parent)
