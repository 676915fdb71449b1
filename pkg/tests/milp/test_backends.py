import pytest

from neolrp.config import AppSettings, SolverSettings, configure
from neolrp.infrastructure.exceptions import BackendError, ConfigError
from neolrp.modules.instances import ClrpInstance
from neolrp.modules.milp import (
    MilpBackend,
    MilpModel,
    MilpSolution,
    ModelKind,
    PulpBackend,
    Sense,
    SolveStatus,
    build_flp_model,
    extract_result,
    get_registry,
    resolve_backend,
    solve_model,
)
from neolrp.modules.milp.backends import BackendAlreadyRegisteredError, BackendNotFoundError
from neolrp.modules.milp.backends.pulp import _seed_options


class FakeBackend:
    """Opens depot 0 and sends every customer there."""

    def __init__(self, engine: str = "fake") -> None:
        self.engine = engine
        self.calls: list[dict[str, float | None]] = []

    @property
    def name(self) -> str:
        return f"fake:{self.engine}"

    def solve(
        self,
        model: MilpModel,
        *,
        time_limit: float,
        mip_gap: float,
        threads: int,
        seed: int | None = None,
    ) -> MilpSolution:
        self.calls.append(
            {"time_limit": time_limit, "mip_gap": mip_gap, "threads": threads, "seed": seed}
        )
        values = [0.0] * len(model.variables)
        first = model.depot_ids[0]
        values[model.y[first]] = 1.0
        for j in model.customer_ids:
            values[model.x[first, j]] = 1.0
        return MilpSolution(
            status=SolveStatus.FEASIBLE,
            objective=model.evaluate_objective(values),
            values=tuple(values),
        )


def bound_model(lower: float) -> MilpModel:
    model = MilpModel(kind=ModelKind.FLP, name="bound")
    v = model.add_continuous("v")
    model.add_constraint([(v, 1.0)], Sense.GE, lower, name="floor")
    model.set_objective([(v, 1.0)])
    return model


class TestRegistry:
    def test_pulp_is_registered_by_default(self) -> None:
        registry = get_registry()

        assert "pulp" in registry
        assert registry.create("pulp", "PULP_CBC_CMD").name == "pulp:PULP_CBC_CMD"

    def test_duplicate_registration(self) -> None:
        with pytest.raises(BackendAlreadyRegisteredError):
            get_registry().register("pulp", PulpBackend)

    def test_replace(self) -> None:
        registry = get_registry()

        registry.register("pulp", FakeBackend, replace=True)

        assert isinstance(registry.create("pulp", "x"), FakeBackend)

    def test_unknown_name(self) -> None:
        with pytest.raises(BackendNotFoundError):
            get_registry().get("nope")

    def test_unknown_name_is_a_config_error(self) -> None:
        with pytest.raises(ConfigError) as exc_info:
            resolve_backend("nope")

        assert exc_info.value.errors == [{"field": "solver.backend", "known": ["pulp"]}]

    def test_backends_satisfy_protocol(self) -> None:
        assert isinstance(PulpBackend(), MilpBackend)
        assert isinstance(FakeBackend(), MilpBackend)


class TestSolveModel:
    def test_named_backend(self, instance: ClrpInstance) -> None:
        fake = FakeBackend()
        get_registry().register("fake", lambda engine: fake)

        result = solve_model(build_flp_model(instance), "fake", time_limit=5.0)

        assert result.backend == "fake:fake"
        assert result.status == SolveStatus.FEASIBLE
        assert result.allocation is not None
        assert result.allocation.y == (1, 0)
        assert fake.calls == [{"time_limit": 5.0, "mip_gap": 1e-4, "threads": 1, "seed": None}]

    def test_backend_from_settings(self, instance: ClrpInstance) -> None:
        get_registry().register("fake", FakeBackend)
        configure(AppSettings(solver=SolverSettings(backend="fake", engine="cfg", threads=3)))

        result = solve_model(build_flp_model(instance))

        assert result.backend == "fake:cfg"

    def test_settings_feed_solver_limits(self, instance: ClrpInstance) -> None:
        fake = FakeBackend()
        configure(AppSettings(solver=SolverSettings(time_limit=7.0, mip_gap=0.01, threads=2)))

        solve_model(build_flp_model(instance), fake)

        assert fake.calls == [{"time_limit": 7.0, "mip_gap": 0.01, "threads": 2, "seed": None}]

    def test_seed_reaches_the_backend(self, instance: ClrpInstance) -> None:
        fake = FakeBackend()

        solve_model(build_flp_model(instance), fake, seed=7)

        assert fake.calls[0]["seed"] == 7


class TestExtractResult:
    def test_thresholds_binaries(self, instance: ClrpInstance) -> None:
        model = build_flp_model(instance)
        values = [0.0] * len(model.variables)
        values[model.y[0]] = 0.7
        values[model.y[1]] = 0.2
        for j in model.customer_ids:
            values[model.x[0, j]] = 0.7
            values[model.x[1, j]] = 0.2

        result = extract_result(
            model, MilpSolution(status=SolveStatus.FEASIBLE, objective=1.0, values=tuple(values))
        )

        assert result.allocation is not None
        assert result.allocation.y == (1, 0)
        assert result.allocation.x == ((1, 1, 1, 1), (0, 0, 0, 0))
        assert result.gamma == {}

    def test_no_incumbent(self, instance: ClrpInstance) -> None:
        result = extract_result(
            build_flp_model(instance), MilpSolution(status=SolveStatus.NOT_SOLVED), backend="b"
        )

        assert result.allocation is None
        assert result.objective is None
        assert not result.feasible

    @pytest.mark.parametrize(
        ("status", "expected"),
        [
            (SolveStatus.OPTIMAL, True),
            (SolveStatus.FEASIBLE, True),
            (SolveStatus.INFEASIBLE, False),
            (SolveStatus.UNBOUNDED, False),
            (SolveStatus.NOT_SOLVED, False),
        ],
    )
    def test_status_has_solution(self, status: SolveStatus, expected: bool) -> None:
        assert status.has_solution is expected


class TestPulpBackend:
    @pytest.mark.parametrize(
        ("engine", "seed", "expected"),
        [
            ("PULP_CBC_CMD", 0, {"options": ["randomCbcSeed 1", "randomSeed 1"]}),
            ("PULP_CBC_CMD", None, {}),
            ("HiGHS_CMD", 3, {}),
        ],
    )
    def test_seed_options(
        self, engine: str, seed: int | None, expected: dict[str, list[str]]
    ) -> None:
        assert _seed_options(engine, seed) == expected

    def test_seeded_solve(self) -> None:
        solution = PulpBackend().solve(
            bound_model(1.5), time_limit=10.0, mip_gap=0.0, threads=1, seed=4
        )

        assert solution.objective == pytest.approx(1.5)

    def test_solves_a_bounded_program(self) -> None:
        solution = PulpBackend().solve(bound_model(2.5), time_limit=10.0, mip_gap=0.0, threads=1)

        assert solution.status == SolveStatus.OPTIMAL
        assert solution.objective == pytest.approx(2.5)
        assert solution.values[0] == pytest.approx(2.5)

    def test_violated_constant_row(self) -> None:
        model = bound_model(0.0)
        model.add_constraint([(0, 0.0)], Sense.GE, 1.0, name="impossible")

        solution = PulpBackend().solve(model, time_limit=10.0, mip_gap=0.0, threads=1)

        assert solution.status == SolveStatus.INFEASIBLE
        assert solution.values == ()

    def test_unknown_engine(self) -> None:
        with pytest.raises(BackendError):
            PulpBackend("NO_SUCH_ENGINE").solve(
                bound_model(1.0), time_limit=10.0, mip_gap=0.0, threads=1
            )
