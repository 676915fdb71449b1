import time
from abc import ABC, abstractmethod
from dataclasses import dataclass
from pathlib import Path

from neolrp.infrastructure.exceptions import StageError
from neolrp.infrastructure.observability import bind_stage, get_logger, set_run_id
from neolrp.modules.pipeline.artifacts import ProvenanceRecord, Workspace
from neolrp.modules.pipeline.config import ExperimentConfig, SolveMode

logger = get_logger(__name__)


@dataclass(frozen=True, slots=True)
class StageContext:
    config: ExperimentConfig
    workspace: Workspace
    modes: tuple[SolveMode, ...]

    @classmethod
    def from_config(
        cls, config: ExperimentConfig, modes: tuple[SolveMode, ...] | None = None
    ) -> "StageContext":
        return cls(config=config, workspace=Workspace(config.root), modes=modes or config.modes)

    def provenance(
        self,
        stage: str,
        artifact: Path,
        seed: int,
        *,
        inputs: tuple[Path, ...] = (),
        timings: dict[str, float] | None = None,
        extra: dict[str, object] | None = None,
    ) -> ProvenanceRecord:
        root = self.workspace.root
        return ProvenanceRecord(
            stage=stage,
            artifact=artifact.relative_to(root).as_posix(),
            config_hash=self.config.hash,
            seed=seed,
            inputs=tuple(_relative(p, root) for p in inputs),
            timings=timings or {},
            extra=extra or {},
        )


def _relative(path: Path, root: Path) -> str:
    return path.relative_to(root).as_posix() if path.is_relative_to(root) else path.name


class Stage(ABC):
    name: str
    order: int

    @abstractmethod
    def run(self, ctx: StageContext) -> list[Path]:
        pass


_stages: dict[str, type[Stage]] = {}


def register_stage(stage_class: type[Stage]) -> type[Stage]:
    _stages[stage_class.name] = stage_class
    return stage_class


def get_stage(name: str) -> type[Stage] | None:
    return _stages.get(name)


def get_all_stages() -> list[type[Stage]]:
    return sorted(_stages.values(), key=lambda s: s.order)


def get_stage_names() -> list[str]:
    return [s.name for s in get_all_stages()]


def _execute(stage_class: type[Stage], ctx: StageContext) -> list[Path]:
    with bind_stage(stage_class.name):
        started = time.perf_counter()
        written = stage_class().run(ctx)
        logger.info(
            "stage_completed",
            artifacts=len(written),
            seconds=round(time.perf_counter() - started, 3),
        )
    return written


def run_stage(name: str, ctx: StageContext) -> list[Path]:
    stage_class = get_stage(name)
    if not stage_class:
        raise StageError(name, f"unknown stage, available: {get_stage_names()}")
    set_run_id(f"{ctx.config.name}:{ctx.config.hash}")
    return _execute(stage_class, ctx)


def run_all_stages(ctx: StageContext) -> dict[str, list[Path]]:
    set_run_id(f"{ctx.config.name}:{ctx.config.hash}")
    return {s.name: _execute(s, ctx) for s in get_all_stages()}
