from pathlib import Path

import numpy as np
import pytest
from pydantic import ValidationError

from neolrp.infrastructure.constants import Provenance
from neolrp.infrastructure.exceptions import (
    ConfigError,
    GenerationStallError,
    InvalidInstanceError,
    ParseError,
)
from neolrp.modules.instances import ClrpInstance, Customer, Depot, arc_cost
from neolrp.modules.sampling import (
    CustomerPositioning,
    DemandScheme,
    DepotPositioning,
    GvsParams,
    RouteSizeClass,
    SamplingConfig,
    SamplingMethod,
    dumps_dataset,
    gvs_sample,
    loads_dataset,
    nearest_feasible_depot,
    parse_gvs_params,
    pscc_sample,
    read_dataset,
    rscc_sample,
    sample_dataset,
    sample_test_dataset,
    write_dataset,
)
from neolrp.modules.sampling.gvs import (
    draw_demands,
    generate_vrp,
    place_customers,
    place_depot,
    vehicle_capacity,
)
from tests.factories import ClrpInstanceFactory


class TestRscc:
    def test_same_seed_same_dataset(self, instance: ClrpInstance) -> None:
        first = rscc_sample([instance], 10, seed=3)
        second = rscc_sample([instance], 10, seed=3)

        assert dumps_dataset(first) == dumps_dataset(second)

    def test_different_seed_different_dataset(self, instance: ClrpInstance) -> None:
        assert dumps_dataset(rscc_sample([instance], 10, seed=3)) != dumps_dataset(
            rscc_sample([instance], 10, seed=4)
        )

    def test_samples_are_distinct(self, instance: ClrpInstance) -> None:
        ds = rscc_sample([instance], 10, seed=0)

        assert len(ds) == 10
        assert len({s.vrp.dedup_key() for s in ds.samples}) == 10

    def test_samples_fit_the_chosen_depot(self) -> None:
        inst = ClrpInstanceFactory.with_depot_capacity(6)

        ds = rscc_sample([inst], 8, seed=1)

        assert all(s.vrp.total_demand <= 6 for s in ds.samples)
        assert ds.header.rejected > 0

    def test_samples_inherit_source_parameters(self, instance: ClrpInstance) -> None:
        ds = rscc_sample([instance], 5, seed=0)

        depots = {d.coord for d in instance.depots}
        for sample in ds.samples:
            assert sample.vrp.depot in depots
            assert sample.vrp.capacity == instance.vehicle_capacity
            assert 1 <= sample.vrp.size <= instance.n_customers
            assert sample.label is None

    def test_header(self, instance: ClrpInstance) -> None:
        ds = rscc_sample([instance], 5, seed=7, config_hash="abc")

        assert ds.header.method == SamplingMethod.RSCC
        assert ds.header.seed == 7
        assert ds.header.config_hash == "abc"
        assert ds.header.sources == ("tiny",)
        assert ds.header.attempts >= 5

    def test_stalls_when_distinct_samples_run_out(self, instance: ClrpInstance) -> None:
        # 2 depots x 15 non-empty customer subsets
        with pytest.raises(GenerationStallError) as exc_info:
            rscc_sample([instance], 40, seed=0, attempt_factor=1)

        assert exc_info.value.details["requested"] == 40
        assert exc_info.value.details["produced"] <= 30

    def test_requires_sources(self) -> None:
        with pytest.raises(InvalidInstanceError):
            rscc_sample([], 5, seed=0)


class TestPscc:
    def test_nearest_feasible_depot(self, instance: ClrpInstance) -> None:
        assert nearest_feasible_depot(instance, [0, 1]) == 0
        assert nearest_feasible_depot(instance, [2, 3]) == 1

    def test_no_depot_can_hold_the_subset(self) -> None:
        inst = ClrpInstanceFactory.with_depot_capacity(6)

        assert nearest_feasible_depot(inst, [0, 1, 2, 3]) is None

    def test_samples_use_nearest_depot(self, instance: ClrpInstance) -> None:
        ds = pscc_sample([instance], 10, seed=0)

        assert ds.header.method == SamplingMethod.PSCC
        for sample in ds.samples:
            distances = [
                sum(arc_cost(d.coord, (c.x, c.y)) for c in sample.vrp.customers)
                for d in instance.depots
            ]
            nearest = min(range(instance.n_depots), key=lambda i: (distances[i], i))
            assert sample.vrp.depot == instance.depots[nearest].coord


    @pytest.mark.parametrize("flipped", [False, True])
    def test_distance_tie_goes_to_lower_index(self, flipped: bool) -> None:
        depots = (
            Depot(id=0, x=0.0, y=0.0, capacity=10, fixed_cost=1.0),
            Depot(id=1, x=10.0, y=0.0, capacity=10, fixed_cost=1.0),
        )
        inst = ClrpInstanceFactory.build(
            depots=depots[::-1] if flipped else depots,
            customers=(Customer(id=2, x=5.0, y=0.0, demand=1),),
        )

        assert nearest_feasible_depot(inst, [0]) == 0
        ds = pscc_sample([inst], 1, seed=0)
        assert ds.samples[0].vrp.depot == inst.depots[0].coord


class TestGvs:
    @pytest.fixture
    def params(self) -> GvsParams:
        return GvsParams(min_customers=3, max_customers=8, customer_cap=10)

    def test_sizes_and_grid(self, params: GvsParams) -> None:
        ds = gvs_sample(params, 6, seed=1)

        assert ds.header.method == SamplingMethod.GVS
        assert ds.header.customer_cap == 10
        for sample in ds.samples:
            assert 3 <= sample.vrp.size <= 8
            for c in sample.vrp.customers:
                assert 0.0 <= c.x <= 1000.0
                assert 0.0 <= c.y <= 1000.0
                assert c.demand <= sample.vrp.capacity

    def test_reproducible(self, params: GvsParams) -> None:
        assert dumps_dataset(gvs_sample(params, 4, seed=2)) == dumps_dataset(
            gvs_sample(params, 4, seed=2)
        )

    def test_accepts_raw_parameters(self) -> None:
        ds = gvs_sample({"min_customers": 2, "max_customers": 4, "customer_cap": 4}, 3, seed=0)

        assert all(2 <= s.vrp.size <= 4 for s in ds.samples)

    def test_mixed_axes(self) -> None:
        params = GvsParams(
            min_customers=5,
            max_customers=10,
            customer_cap=10,
            depot_positioning=tuple(DepotPositioning),
            customer_positioning=tuple(CustomerPositioning),
            demand_scheme=tuple(DemandScheme),
            route_size=tuple(RouteSizeClass),
        )

        ds = gvs_sample(params, 10, seed=5)

        assert len(ds) == 10

    def test_random_customers_fill_quadrants_evenly(self) -> None:
        params = GvsParams(
            min_customers=40,
            max_customers=60,
            customer_cap=60,
            depot_positioning=(DepotPositioning.CENTERED,),
            customer_positioning=(CustomerPositioning.RANDOM,),
        )

        ds = gvs_sample(params, 50, seed=3)

        counts = np.zeros(4)
        for sample in ds.samples:
            cx, cy = sample.vrp.depot
            for c in sample.vrp.customers:
                counts[2 * int(c.x >= cx) + int(c.y >= cy)] += 1
        shares = counts / counts.sum()
        assert np.all((shares >= 0.20) & (shares <= 0.30)), shares

    def test_depot_positioning(self) -> None:
        rng = np.random.default_rng(0)

        assert place_depot(DepotPositioning.CENTERED, rng) == (500.0, 500.0)
        assert place_depot(DepotPositioning.CORNERED, rng) == (0.0, 0.0)

    @pytest.mark.parametrize("mode", list(CustomerPositioning))
    def test_customer_count(self, mode: CustomerPositioning) -> None:
        points = place_customers(mode, 25, np.random.default_rng(0))

        assert points.shape == (25, 2)

    @pytest.mark.parametrize(
        ("scheme", "low", "high"),
        [
            (DemandScheme.UNITARY, 1, 1),
            (DemandScheme.SMALL, 1, 10),
            (DemandScheme.LARGE, 50, 100),
            (DemandScheme.UNIFORM, 1, 100),
            (DemandScheme.QUADRANT, 1, 100),
            (DemandScheme.SMALL_LARGE, 1, 100),
        ],
    )
    def test_demand_ranges(self, scheme: DemandScheme, low: int, high: int) -> None:
        rng = np.random.default_rng(0)
        coords = rng.uniform(0.0, 1000.0, size=(50, 2))

        demands = draw_demands(scheme, coords, rng)

        assert demands.min() >= low
        assert demands.max() <= high

    def test_capacity_covers_largest_demand(self) -> None:
        demands = np.array([1, 1, 1, 90])

        capacity = vehicle_capacity(RouteSizeClass.VERY_SHORT, demands, np.random.default_rng(0))

        assert capacity >= 90

    def test_generated_instance_uses_configured_costs(self) -> None:
        params = GvsParams(min_customers=2, max_customers=2, customer_cap=2, vehicle_cost=25.0)

        vrp = generate_vrp(params, np.random.default_rng(0))

        assert vrp.size == 2
        assert vrp.vehicle_cost == 25.0

    def test_invalid_range(self) -> None:
        with pytest.raises(ConfigError) as exc_info:
            parse_gvs_params({"min_customers": 5, "max_customers": 2})

        assert exc_info.value.errors

    def test_customer_cap(self) -> None:
        with pytest.raises(ValidationError, match="capped"):
            GvsParams(max_customers=150)


class TestDatasetFile:
    def test_written_dataset_reads_back(self, instance: ClrpInstance, tmp_path: Path) -> None:
        ds = rscc_sample([instance], 5, seed=0)

        path = write_dataset(ds, tmp_path / "nested" / "train.jsonl")

        assert read_dataset(path) == ds

    def test_one_record_per_line(self, instance: ClrpInstance) -> None:
        text = dumps_dataset(rscc_sample([instance], 5, seed=0))

        assert len(text.splitlines()) == 6
        assert text.startswith('{"header":')

    def test_empty_file(self) -> None:
        with pytest.raises(ParseError) as exc_info:
            loads_dataset("")

        assert exc_info.value.section == "header"

    def test_bad_sample_line(self, instance: ClrpInstance) -> None:
        header = dumps_dataset(rscc_sample([instance], 1, seed=0)).splitlines()[0]

        with pytest.raises(ParseError) as exc_info:
            loads_dataset(header + "\n{not json}\n")

        assert exc_info.value.line == 2
        assert exc_info.value.section == "samples"


class TestSamplingService:
    def test_dispatches_on_method(self, instance: ClrpInstance) -> None:
        config = SamplingConfig(method=SamplingMethod.PSCC, n_data=4, seed=9)

        ds = sample_dataset(config, [instance])

        assert ds.header.method == SamplingMethod.PSCC
        assert ds.header.seed == 9
        assert len(ds) == 4

    def test_subsampling_needs_sources(self) -> None:
        with pytest.raises(ConfigError):
            sample_dataset(SamplingConfig(n_data=4), [])

    def test_gvs_needs_parameters(self) -> None:
        with pytest.raises(ValidationError):
            SamplingConfig(method=SamplingMethod.GVS)

    def test_no_test_set_by_default(self, instance: ClrpInstance) -> None:
        assert sample_test_dataset(SamplingConfig(n_data=4), [instance]) is None

    def test_test_set_uses_offset_seed(self, instance: ClrpInstance) -> None:
        config = SamplingConfig(n_data=4, n_test=3, seed=2)

        ds = sample_test_dataset(config, [instance])

        assert ds is not None
        assert len(ds) == 3
        assert ds.header.seed == 2 + Provenance.TEST_SEED_OFFSET

    def test_test_set_is_disjoint_from_training(self, instance: ClrpInstance) -> None:
        config = SamplingConfig(n_data=12, n_test=6, seed=1)
        train = sample_dataset(config, [instance])

        test = sample_test_dataset(config, [instance], train=train)

        assert test is not None
        assert len(test) == 6
        train_keys = {s.vrp.dedup_key() for s in train.samples}
        assert train_keys.isdisjoint(s.vrp.dedup_key() for s in test.samples)

    def test_excluded_keys_are_never_drawn(self, instance: ClrpInstance) -> None:
        first = pscc_sample([instance], 8, seed=0)
        keys = {s.vrp.dedup_key() for s in first.samples}

        second = pscc_sample([instance], 5, seed=0, exclude=keys)

        assert keys.isdisjoint(s.vrp.dedup_key() for s in second.samples)
