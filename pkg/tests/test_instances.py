import math
from pathlib import Path

import numpy as np
import pytest
from pydantic import ValidationError

from neolrp.infrastructure.exceptions import (
    InvalidInstanceError,
    ParseError,
    SolutionValidationError,
)
from neolrp.modules.instances import (
    ClrpInstance,
    ClrpSolution,
    Depot,
    LocationAllocation,
    RoundingMode,
    ViolationKind,
    VrpCustomer,
    VrpInstance,
    allocation_violations,
    arc_cost,
    canonical_order,
    format_prodhon,
    instance_name,
    load_instance,
    normalize_features,
    parse_prodhon,
    solution_cost,
    tour_cost,
    validate_solution,
)
from tests.factories import ClrpInstanceFactory


def _lines(text: str) -> list[str]:
    return text.rstrip("\n").split("\n")


@pytest.fixture
def solution() -> ClrpSolution:
    return ClrpSolution(
        open_depots=(0, 1),
        allocation={0: (2, 3), 1: (4, 5)},
        routes={0: ((2, 3),), 1: ((4, 5),)},
    )


class TestParseProdhon:
    def test_reads_every_section(self, prodhon_text: str) -> None:
        inst = parse_prodhon(prodhon_text, name="tiny")

        assert inst.name == "tiny"
        assert inst.n_customers == 4
        assert inst.n_depots == 2
        assert inst.depots[1].coord == (10.0, 0.0)
        assert [d.capacity for d in inst.depots] == [100, 100]
        assert [d.fixed_cost for d in inst.depots] == [50.0, 60.0]
        assert [c.id for c in inst.customers] == [2, 3, 4, 5]
        assert [c.demand for c in inst.customers] == [3, 4, 5, 2]
        assert inst.vehicle_capacity == 10
        assert inst.vehicle_fixed_cost == 0.0
        assert inst.rounding_mode == RoundingMode.RAW

    def test_rounding_flag_selects_prodhon_costs(self, prodhon_text: str) -> None:
        lines = _lines(prodhon_text)
        lines[-1] = "1"

        inst = parse_prodhon("\n".join(lines))

        assert inst.rounding_mode == RoundingMode.PRODHON100

    def test_format_then_parse_preserves_instance(self, instance: ClrpInstance) -> None:
        assert parse_prodhon(format_prodhon(instance), name=instance.name) == instance

    def test_truncated_file_names_the_missing_section(self, prodhon_text: str) -> None:
        truncated = "\n".join(_lines(prodhon_text)[:-1])

        with pytest.raises(ParseError) as exc_info:
            parse_prodhon(truncated)

        assert exc_info.value.section == "rounding flag"
        assert exc_info.value.line is None

    def test_non_numeric_token_reports_its_line(self, prodhon_text: str) -> None:
        text = prodhon_text.replace("9 1", "9 abc")
        expected_line = _lines(text).index("9 abc") + 1

        with pytest.raises(ParseError) as exc_info:
            parse_prodhon(text)

        assert exc_info.value.line == expected_line
        assert exc_info.value.section == "customer coordinates"

    def test_rejects_unknown_rounding_flag(self, prodhon_text: str) -> None:
        lines = _lines(prodhon_text)
        lines[-1] = "2"

        with pytest.raises(ParseError, match="rounding flag"):
            parse_prodhon("\n".join(lines))

    def test_rejects_trailing_tokens(self, prodhon_text: str) -> None:
        with pytest.raises(ParseError) as exc_info:
            parse_prodhon(prodhon_text + "7\n")

        assert exc_info.value.section == "end of file"

    def test_rejects_zero_depots(self) -> None:
        with pytest.raises(ParseError) as exc_info:
            parse_prodhon("0\n0\n")

        assert exc_info.value.section == "depot count"

    def test_demand_above_vehicle_capacity_is_invalid(self, prodhon_text: str) -> None:
        lines = _lines(prodhon_text)
        lines[lines.index("10")] = "3"

        with pytest.raises(InvalidInstanceError):
            parse_prodhon("\n".join(lines))


class TestLoadInstance:
    def test_names_instance_after_benchmark_file(self, instance_file: Path) -> None:
        inst = load_instance(instance_file)

        assert inst.name == "20-5-1a"
        assert inst.n_customers == 4

    def test_missing_file(self, tmp_path: Path) -> None:
        with pytest.raises(InvalidInstanceError):
            load_instance(tmp_path / "absent.dat")

    @pytest.mark.parametrize(
        ("filename", "expected"),
        [
            ("coord20-5-1.dat", "20-5-1a"),
            ("coord20-5-1b.dat", "20-5-1b"),
            ("coord100-10-3.dat", "100-10-3a"),
            ("coord50-5-2BIS.dat", "50-5-2bis"),
            ("coord50-5-2bBIS.dat", "50-5-2bbis"),
            ("custom-instance.dat", "custom-instance"),
        ],
    )
    def test_instance_name(self, filename: str, expected: str) -> None:
        assert instance_name(Path("data") / filename) == expected


class TestInstanceModel:
    def test_rejects_shared_depot_and_customer_ids(self) -> None:
        with pytest.raises(ValidationError, match="disjoint"):
            ClrpInstanceFactory.build(
                depots=(Depot(id=2, x=0.0, y=0.0, capacity=10, fixed_cost=1.0),)
            )

    def test_rejects_duplicate_depot_ids(self) -> None:
        depot = Depot(id=0, x=0.0, y=0.0, capacity=10, fixed_cost=1.0)

        with pytest.raises(ValidationError, match="depot ids"):
            ClrpInstanceFactory.build(depots=(depot, depot))

    def test_induced_vrp(self, instance: ClrpInstance) -> None:
        vrp = instance.induced_vrp(1, [2, 3])

        assert vrp.depot == (10.0, 0.0)
        assert [(c.x, c.y, c.demand) for c in vrp.customers] == [(9.0, 1.0, 5), (11.0, -1.0, 2)]
        assert vrp.capacity == instance.vehicle_capacity
        assert vrp.total_demand == 7

    def test_dedup_key_ignores_customer_order(self) -> None:
        customers = (VrpCustomer(x=1.0, y=2.0, demand=3), VrpCustomer(x=4.0, y=5.0, demand=6))
        a = VrpInstance(depot=(0.0, 0.0), customers=customers, capacity=10)
        b = VrpInstance(depot=(0.0, 0.0), customers=customers[::-1], capacity=10)

        assert a.dedup_key() == b.dedup_key()

    def test_allocation_from_depot_choice(self) -> None:
        alloc = LocationAllocation.from_depot_choice(3, [0, 0, 2], extra_open=[1])

        assert alloc.y == (1, 1, 1)
        assert alloc.customers_of(0) == [0, 1]
        assert alloc.customers_of(1) == []
        assert alloc.open_indices == [0, 1, 2]


class TestCosts:
    def test_raw_distance(self) -> None:
        assert arc_cost((0.0, 0.0), (3.0, 4.0)) == 5.0

    def test_prodhon_rounding(self) -> None:
        assert arc_cost((0.0, 0.0), (3.0, 4.0), RoundingMode.PRODHON100) == 500
        assert arc_cost((0.0, 0.0), (1.0, 1.0), RoundingMode.PRODHON100) == 142

    def test_tour_cost(self) -> None:
        assert tour_cost((0.0, 0.0), [], RoundingMode.RAW) == 0.0
        assert tour_cost((0.0, 0.0), [(3.0, 4.0)], RoundingMode.RAW) == 10.0

    def test_solution_cost(self, instance: ClrpInstance, solution: ClrpSolution) -> None:
        expected = 50 + 60 + 5 * math.sqrt(2) + 2 * math.sqrt(5)

        assert solution_cost(instance, solution) == pytest.approx(expected)

    def test_vehicle_cost_is_charged_per_route(self, solution: ClrpSolution) -> None:
        base = solution_cost(ClrpInstanceFactory.build(), solution)
        inst = ClrpInstanceFactory.build(vehicle_fixed_cost=7.0)

        assert solution_cost(inst, solution) == pytest.approx(base + 14.0)

    def test_infeasible_solution_has_no_cost(self, instance: ClrpInstance) -> None:
        partial = ClrpSolution(open_depots=(0,), allocation={0: (2, 3)}, routes={0: ((2, 3),)})

        with pytest.raises(SolutionValidationError):
            solution_cost(instance, partial)


class TestValidation:
    def _kinds(self, inst: ClrpInstance, sol: ClrpSolution) -> set[ViolationKind]:
        return {v.kind for v in validate_solution(inst, sol)}

    def test_feasible_solution(self, instance: ClrpInstance, solution: ClrpSolution) -> None:
        assert validate_solution(instance, solution) == []

    def test_closed_depot(self, instance: ClrpInstance, solution: ClrpSolution) -> None:
        closed = solution.model_copy(update={"open_depots": (0,)})

        assert ViolationKind.CLOSED_DEPOT in self._kinds(instance, closed)

    def test_customer_served_twice(self, instance: ClrpInstance) -> None:
        sol = ClrpSolution(
            open_depots=(0, 1),
            allocation={0: (2, 3, 4), 1: (4, 5)},
            routes={0: ((2, 3, 4),), 1: ((4, 5),)},
        )

        assert ViolationKind.PARTITION in self._kinds(instance, sol)

    def test_vehicle_overload(self, instance: ClrpInstance) -> None:
        sol = ClrpSolution(
            open_depots=(0,), allocation={0: (2, 3, 4, 5)}, routes={0: ((2, 3, 4, 5),)}
        )

        assert self._kinds(instance, sol) == {ViolationKind.VEHICLE_CAPACITY}

    def test_depot_overload(self, solution: ClrpSolution) -> None:
        inst = ClrpInstanceFactory.with_depot_capacity(6)

        assert ViolationKind.DEPOT_CAPACITY in self._kinds(inst, solution)

    def test_routes_must_cover_allocation(self, instance: ClrpInstance) -> None:
        sol = ClrpSolution(
            open_depots=(0, 1),
            allocation={0: (2, 3), 1: (4, 5)},
            routes={0: ((2,),), 1: ((4, 5),)},
        )

        assert ViolationKind.ROUTE_COVERAGE in self._kinds(instance, sol)

    def test_unknown_depot(self, instance: ClrpInstance, solution: ClrpSolution) -> None:
        sol = solution.model_copy(update={"open_depots": (0, 1, 9)})

        assert ViolationKind.UNKNOWN_DEPOT in self._kinds(instance, sol)


class TestAllocationViolations:
    def test_feasible_allocation(self, instance: ClrpInstance) -> None:
        alloc = LocationAllocation.from_depot_choice(2, [0, 0, 1, 1])

        assert allocation_violations(instance, alloc) == []

    def test_shape_mismatch(self, instance: ClrpInstance) -> None:
        alloc = LocationAllocation.from_depot_choice(2, [0, 0, 1])

        [violation] = allocation_violations(instance, alloc)
        assert violation.kind == ViolationKind.SHAPE

    def test_assignment_to_closed_depot(self, instance: ClrpInstance) -> None:
        alloc = LocationAllocation(y=(1, 0), x=((1, 1, 0, 0), (0, 0, 1, 1)))

        kinds = {v.kind for v in allocation_violations(instance, alloc)}
        assert kinds == {ViolationKind.CLOSED_DEPOT}

    def test_unassigned_customer(self, instance: ClrpInstance) -> None:
        alloc = LocationAllocation(y=(1, 1), x=((1, 1, 0, 0), (0, 0, 1, 0)))

        [violation] = allocation_violations(instance, alloc)
        assert violation.kind == ViolationKind.PARTITION
        assert violation.ids == (5,)

    def test_depot_capacity(self) -> None:
        inst = ClrpInstanceFactory.with_depot_capacity(6)
        alloc = LocationAllocation.from_depot_choice(2, [0, 0, 1, 1])

        kinds = [v.kind for v in allocation_violations(inst, alloc)]
        assert kinds == [ViolationKind.DEPOT_CAPACITY, ViolationKind.DEPOT_CAPACITY]


class TestFeatures:
    def test_centered_and_scaled(self, instance: ClrpInstance) -> None:
        features = normalize_features(instance.induced_vrp(1, [2, 3]))

        assert features.scale == 1.0
        np.testing.assert_allclose(features.sigma, [[-1.0, 1.0, 0.5], [1.0, -1.0, 0.2]])

    def test_scale_defaults_to_one_when_customers_sit_on_depot(self) -> None:
        vrp = VrpInstance(
            depot=(5.0, 5.0), customers=(VrpCustomer(x=5.0, y=5.0, demand=1),), capacity=4
        )

        features = normalize_features(vrp)

        assert features.scale == 1.0
        np.testing.assert_allclose(features.sigma, [[0.0, 0.0, 0.25]])

    def test_requires_customers(self) -> None:
        vrp = VrpInstance(depot=(0.0, 0.0), capacity=4)

        with pytest.raises(InvalidInstanceError):
            normalize_features(vrp)

    def test_canonical_order_is_input_order_independent(self) -> None:
        sigma = np.random.default_rng(0).normal(size=(6, 3))

        np.testing.assert_array_equal(canonical_order(sigma), canonical_order(sigma[::-1]))

    def test_hand_computed_example(self) -> None:
        vrp = VrpInstance(
            depot=(0.0, 0.0),
            customers=(VrpCustomer(x=2.0, y=1.0, demand=5), VrpCustomer(x=-4.0, y=3.0, demand=10)),
            capacity=10,
        )

        features = normalize_features(vrp)

        assert features.scale == 4.0
        np.testing.assert_array_equal(features.sigma, [[0.5, 0.25, 0.5], [-1.0, 0.75, 1.0]])

    def test_single_customer_at_full_range(self) -> None:
        vrp = VrpInstance(
            depot=(0.0, 0.0), customers=(VrpCustomer(x=7.0, y=0.0, demand=4),), capacity=4
        )

        np.testing.assert_array_equal(normalize_features(vrp).sigma, [[1.0, 0.0, 1.0]])


def _translated(vrp: VrpInstance, dx: float, dy: float) -> VrpInstance:
    return vrp.model_copy(
        update={
            "depot": (vrp.depot[0] + dx, vrp.depot[1] + dy),
            "customers": tuple(
                VrpCustomer(x=c.x + dx, y=c.y + dy, demand=c.demand) for c in vrp.customers
            ),
        }
    )


class TestTranslationInvariance:
    @pytest.mark.parametrize("seed", range(5))
    def test_grid_coordinates_are_bit_exact(self, seed: int) -> None:
        rng = np.random.default_rng(seed)
        depot = rng.integers(0, 50, size=2)
        points = rng.integers(0, 50, size=(6, 2))
        demands = rng.integers(1, 5, size=6)
        vrp = VrpInstance(
            depot=(float(depot[0]), float(depot[1])),
            customers=tuple(
                VrpCustomer(x=float(x), y=float(y), demand=int(d))
                for (x, y), d in zip(points, demands, strict=True)
            ),
            capacity=10,
        )

        base = normalize_features(vrp)
        moved = normalize_features(_translated(vrp, 100.0, -40.0))

        assert moved.scale == base.scale
        np.testing.assert_array_equal(moved.sigma, base.sigma)

    def test_real_coordinates_agree_to_rounding(self) -> None:
        vrp = VrpInstance(
            depot=(0.3, 0.7),
            customers=(VrpCustomer(x=0.1, y=0.5, demand=2), VrpCustomer(x=0.9, y=0.2, demand=3)),
            capacity=5,
        )

        base = normalize_features(vrp)
        moved = normalize_features(_translated(vrp, 100.0, -40.0))

        assert moved.scale == pytest.approx(base.scale, rel=1e-12)
        np.testing.assert_allclose(moved.sigma, base.sigma, rtol=0.0, atol=1e-12)
        assert np.all(np.abs(moved.sigma) <= 1.0 + 1e-12)


def _feasible_by_loops(inst: ClrpInstance, sol: ClrpSolution) -> bool:
    """Plain nested-loop feasibility check, written independently of validate_solution."""
    depot_ids = [d.id for d in inst.depots]
    customer_ids = [c.id for c in inst.customers]
    demand = {c.id: c.demand for c in inst.customers}

    for depot_id in [*sol.open_depots, *sol.allocation, *sol.routes]:
        if depot_id not in depot_ids:
            return False
    for depot_id, customers in sol.allocation.items():
        if customers and depot_id not in sol.open_depots:
            return False
        for j in customers:
            if j not in customer_ids:
                return False
        load = 0
        for j in customers:
            load += demand[j]
        for depot in inst.depots:
            if depot.id == depot_id and load > depot.capacity:
                return False
    for depot_id, routes in sol.routes.items():
        if routes and depot_id not in sol.open_depots:
            return False
    for j in customer_ids:
        seen = 0
        for customers in sol.allocation.values():
            for k in customers:
                if k == j:
                    seen += 1
        if seen != 1:
            return False
    for depot_id in {*sol.allocation, *sol.routes}:
        allocated = list(sol.allocation.get(depot_id, ()))
        visited: list[int] = []
        for route in sol.routes.get(depot_id, ()):
            if not route:
                return False
            load = 0
            for j in route:
                load += demand.get(j, 0)
                visited.append(j)
            if load > inst.vehicle_capacity:
                return False
        if sorted(visited) != sorted(allocated):
            return False
    return True


def _random_solution(inst: ClrpInstance, rng: np.random.Generator) -> ClrpSolution:
    depot_ids = [d.id for d in inst.depots]
    allocation: dict[int, list[int]] = {i: [] for i in depot_ids}
    for c in inst.customers:
        allocation[depot_ids[int(rng.integers(len(depot_ids)))]].append(c.id)
    routes: dict[int, list[list[int]]] = {}
    for i, customers in allocation.items():
        order = [customers[k] for k in rng.permutation(len(customers))]
        routes[i] = [order[k : k + 2] for k in range(0, len(order), 2)]
    open_depots = [i for i in depot_ids if allocation[i]]

    match int(rng.integers(8)):
        case 0:
            allocation[depot_ids[0]].append(inst.customers[0].id)
        case 1:
            donor = next((i for i in depot_ids if allocation[i]), depot_ids[0])
            allocation[donor] = allocation[donor][1:]
        case 2:
            if open_depots:
                open_depots.pop(0)
        case 3:
            open_depots.append(99)
        case 4:
            for i in depot_ids:
                routes[i] = [[j for r in routes[i] for j in r]] if routes[i] else []
        case 5:
            routes[depot_ids[-1]].append([])
        case 6:
            for i in depot_ids:
                if routes[i]:
                    routes[i][0] = routes[i][0][1:] or routes[i][0]
                    break
        case _:
            pass

    return ClrpSolution(
        open_depots=tuple(open_depots),
        allocation={i: tuple(js) for i, js in allocation.items()},
        routes={i: tuple(tuple(r) for r in rs) for i, rs in routes.items()},
    )


class TestValidationCrossCheck:
    def test_matches_independent_checker(self) -> None:
        rng = np.random.default_rng(7)
        outcomes: set[bool] = set()

        for trial in range(300):
            capacity = int(rng.integers(6, 16))
            inst = ClrpInstanceFactory.with_depot_capacity(capacity)
            sol = _random_solution(inst, rng)

            expected = _feasible_by_loops(inst, sol)
            assert (validate_solution(inst, sol) == []) is expected, (trial, sol)
            outcomes.add(expected)

        assert outcomes == {True, False}
