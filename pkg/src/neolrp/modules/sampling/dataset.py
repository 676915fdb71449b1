import json
from pathlib import Path

from pydantic import ValidationError

from neolrp.infrastructure.exceptions import ParseError
from neolrp.infrastructure.files import read_text
from neolrp.modules.sampling.schemas import DatasetHeader, VrpDataset, VrpSample


def _line(payload: object) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def dumps_dataset(ds: VrpDataset) -> str:
    lines = [_line({"header": ds.header.model_dump(mode="json")})]
    lines += [_line(sample.to_record()) for sample in ds.samples]
    return "\n".join(lines) + "\n"


def loads_dataset(text: str) -> VrpDataset:
    lines = [(lineno, line) for lineno, line in enumerate(text.splitlines(), start=1) if line]
    if not lines:
        raise ParseError("empty dataset file", None, "header")

    try:
        first_no, first = lines[0]
        header = DatasetHeader.model_validate(json.loads(first)["header"])
    except (json.JSONDecodeError, KeyError, TypeError, ValidationError) as e:
        raise ParseError(f"invalid dataset header: {e}", first_no, "header") from e

    samples: list[VrpSample] = []
    for lineno, line in lines[1:]:
        try:
            samples.append(VrpSample.from_record(json.loads(line)))
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as e:
            raise ParseError(f"invalid sample record: {e}", lineno, "samples") from e
    return VrpDataset(header=header, samples=tuple(samples))


def write_dataset(ds: VrpDataset, path: Path) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dumps_dataset(ds), encoding="utf-8")
    return path


def read_dataset(path: Path) -> VrpDataset:
    return loads_dataset(read_text(path, "dataset file"))
