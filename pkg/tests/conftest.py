import logging
from collections.abc import Iterator
from pathlib import Path

import pytest
import structlog

from neolrp.config import reset
from neolrp.modules.instances import ClrpInstance
from neolrp.modules.milp import reset_registry
from neolrp.modules.surrogate import SurrogateModel
from tests.factories import PRODHON_TEXT, ClrpInstanceFactory, SurrogateFactory


@pytest.fixture(autouse=True)
def isolated_settings() -> Iterator[None]:
    reset()
    yield
    reset()


@pytest.fixture(autouse=True)
def isolated_backends() -> Iterator[None]:
    reset_registry()
    yield
    reset_registry()


@pytest.fixture(autouse=True)
def restore_logging() -> Iterator[None]:
    yield
    logging.getLogger().handlers.clear()
    structlog.reset_defaults()


@pytest.fixture
def instance() -> ClrpInstance:
    return ClrpInstanceFactory.build()


@pytest.fixture
def surrogate() -> SurrogateModel:
    return SurrogateFactory.build()


@pytest.fixture
def prodhon_text() -> str:
    return PRODHON_TEXT


@pytest.fixture
def instance_file(tmp_path: Path) -> Path:
    """The tiny instance saved under a benchmark file name, so it resolves to '20-5-1a'."""
    path = tmp_path / "instances" / "coord20-5-1.dat"
    path.parent.mkdir()
    path.write_text(PRODHON_TEXT, encoding="utf-8")
    return path


@pytest.fixture
def second_instance_file(instance_file: Path) -> Path:
    path = instance_file.with_name("coord20-5-1b.dat")
    path.write_text(PRODHON_TEXT, encoding="utf-8")
    return path
