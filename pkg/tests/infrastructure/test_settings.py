import pytest
from pydantic import ValidationError

from neolrp.config import (
    AppSettings,
    SolverSettings,
    configure,
    get_settings,
    reset,
    settings,
)


class TestDefaults:
    def test_values(self) -> None:
        s = get_settings()

        assert s.name == "neolrp"
        assert s.env == "development"
        assert s.solver.backend == "pulp"
        assert s.solver.engine == "PULP_CBC_CMD"
        assert s.solver.threads == 1
        assert s.routing.exact_limit == 10
        assert s.sampling.attempt_factor == 1000
        assert s.logging.level == "INFO"

    def test_cached(self) -> None:
        assert get_settings() is get_settings()


class TestEnvironment:
    def test_nested_prefix(self, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.setenv("SOLVER_TIME_LIMIT", "12.5")
        monkeypatch.setenv("ROUTING_RESTARTS", "3")
        reset()

        assert settings.solver.time_limit == 12.5
        assert settings.routing.restarts == 3

    def test_app_alias(self, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.setenv("APP_ENV", "test")
        reset()

        assert get_settings().env == "test"
        assert not get_settings().is_benchmark

    def test_benchmark_requires_one_thread(self, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.setenv("APP_ENV", "benchmark")
        monkeypatch.setenv("SOLVER_THREADS", "4")
        reset()

        with pytest.raises(ValidationError, match="SOLVER_THREADS must be 1"):
            get_settings()

    def test_benchmark(self, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.setenv("APP_ENV", "benchmark")
        reset()

        assert get_settings().is_benchmark


class TestOverride:
    def test_configure(self) -> None:
        custom = AppSettings(solver=SolverSettings(backend="other", time_limit=1.0))

        configure(custom)

        assert get_settings() is custom
        assert settings.solver.backend == "other"

    def test_reset_drops_override(self) -> None:
        configure(AppSettings(solver=SolverSettings(backend="other")))

        reset()

        assert settings.solver.backend == "pulp"

    def test_rejects_invalid_values(self) -> None:
        with pytest.raises(ValidationError):
            SolverSettings(time_limit=0)
