import json
from functools import lru_cache
from importlib.resources import files

from neolrp.infrastructure.exceptions import MetricError


@lru_cache
def load_bks() -> dict[str, float]:
    raw = files("neolrp").joinpath("data", "bks.json").read_text(encoding="utf-8")
    return {name: float(value) for name, value in json.loads(raw).items()}


def bks_for(instance: str) -> float:
    table = load_bks()
    if instance not in table:
        raise MetricError(f"no best known solution for instance '{instance}'")
    return table[instance]
