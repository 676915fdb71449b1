import hashlib
import json
from typing import Any

from pydantic import BaseModel

from neolrp.infrastructure.constants import Provenance


def canonical_json(payload: Any) -> str:
    if isinstance(payload, BaseModel):
        payload = payload.model_dump(mode="json")
    return json.dumps(payload, sort_keys=True, separators=(",", ":"), default=str)


def config_hash(payload: Any) -> str:
    digest = hashlib.sha256(canonical_json(payload).encode()).hexdigest()
    return digest[: Provenance.HASH_LENGTH]
