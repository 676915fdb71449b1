import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from neolrp import __version__
from neolrp.infrastructure.constants import Provenance
from neolrp.infrastructure.exceptions import ParseError, StageError


class ProvenanceRecord(BaseModel):
    """Sidecar next to every artifact; enough to regenerate it from the experiment file."""

    model_config = ConfigDict(frozen=True)

    stage: str
    artifact: str
    config_hash: str
    seed: int
    version: str = __version__
    inputs: tuple[str, ...] = ()
    timings: dict[str, float] = Field(default_factory=dict)
    extra: dict[str, Any] = Field(default_factory=dict)


def provenance_path(artifact: Path) -> Path:
    return artifact.with_name(artifact.name + Provenance.SUFFIX)


def dumps_json(payload: Any) -> str:
    if isinstance(payload, BaseModel):
        payload = payload.model_dump(mode="json")
    return json.dumps(payload, sort_keys=True, indent=1) + "\n"


def write_provenance(artifact: Path, provenance: ProvenanceRecord) -> Path:
    sidecar = provenance_path(artifact)
    sidecar.write_text(dumps_json(provenance), encoding="utf-8")
    return sidecar


def write_artifact(path: Path, text: str, provenance: ProvenanceRecord) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
    write_provenance(path, provenance)
    return path


def read_provenance(artifact: Path) -> ProvenanceRecord:
    sidecar = provenance_path(artifact)
    try:
        return ProvenanceRecord.model_validate_json(sidecar.read_text(encoding="utf-8"))
    except FileNotFoundError as e:
        raise StageError("provenance", "missing provenance record", sidecar) from e
    except ValidationError as e:
        raise ParseError(f"invalid provenance record: {e}", None, sidecar.name) from e


def require(path: Path, stage: str) -> Path:
    if not path.is_file():
        raise StageError(stage, f"missing upstream artifact {path.name}", path)
    return path


@dataclass(frozen=True, slots=True)
class Workspace:
    """Artifact layout of one experiment under `<output_dir>/<name>/`."""

    root: Path

    @property
    def config_file(self) -> Path:
        return self.root / "experiment.json"

    def dataset(self, group: str, split: str, *, labeled: bool = False) -> Path:
        suffix = ".labeled" if labeled else ""
        return self.root / "data" / group / f"{split}{suffix}.jsonl"

    def model(self, group: str) -> Path:
        return self.root / "models" / f"{group}.json"

    def search(self, group: str) -> Path:
        return self.root / "models" / f"{group}.search.json"

    def assignment(self, mode: str, instance: str, run: int) -> Path:
        return self.root / "solve" / mode / instance / f"run-{run}.json"

    def solution(self, mode: str, instance: str, run: int) -> Path:
        return self.root / "routes" / mode / instance / f"run-{run}.json"

    def solved_modes(self) -> list[str]:
        base = self.root / "solve"
        return sorted(p.name for p in base.iterdir() if p.is_dir()) if base.is_dir() else []

    @property
    def report(self) -> Path:
        return self.root / "report.json"

    def ablation_cell(self, axis: str, value: str | int) -> Path:
        return self.root / "ablate" / f"{axis}-{value}"

    @property
    def ablation_report(self) -> Path:
        return self.root / "ablation.json"
