import time
from pathlib import Path

from neolrp.infrastructure.constants import Provenance
from neolrp.infrastructure.exceptions import MetricError, StageError
from neolrp.infrastructure.observability import get_logger
from neolrp.infrastructure.seeding import derive_seed
from neolrp.modules.instances import ClrpSolution, load_instance, routing_cost
from neolrp.modules.metrics import (
    InstanceRow,
    Method,
    RunRecord,
    bks_for,
    build_report,
    dumps_report,
    gap_bks,
    pred_error,
    render_table,
)
from neolrp.modules.milp import build_flp_model, build_neo_model, solve_model
from neolrp.modules.pipeline.artifacts import dumps_json, read_provenance, require, write_artifact
from neolrp.modules.pipeline.base import Stage, StageContext, register_stage
from neolrp.modules.pipeline.config import SolveMode
from neolrp.modules.pipeline.schemas import SolveRecord, TrainingSummary
from neolrp.modules.routing import SolverBudget, finalize_routes, label_samples
from neolrp.modules.sampling import (
    dumps_dataset,
    read_dataset,
    sample_dataset,
    sample_test_dataset,
)
from neolrp.modules.surrogate import dumps_model, evaluate_mape, hyperparam_search, load_model

logger = get_logger(__name__)

METHODS = {SolveMode.NEO: Method.NEO_LRP, SolveMode.FLP: Method.FLP_VRP}


@register_stage
class SampleStage(Stage):
    name = "sample"
    order = 10

    def run(self, ctx: StageContext) -> list[Path]:
        written: list[Path] = []
        for group in ctx.config.groups():
            sources = [load_instance(p) for p in group.instances]
            sampling = ctx.config.sampling_for(group)

            started = time.perf_counter()
            train_ds = sample_dataset(sampling, sources, config_hash=ctx.config.hash)
            path = ctx.workspace.dataset(group.name, "train")
            prov = ctx.provenance(
                self.name,
                path,
                group.seed,
                inputs=group.instances,
                timings={"seconds": time.perf_counter() - started},
            )
            written.append(write_artifact(path, dumps_dataset(train_ds), prov))

            test_ds = sample_test_dataset(
                sampling, sources, train=train_ds, config_hash=ctx.config.hash
            )
            if test_ds is not None:
                path = ctx.workspace.dataset(group.name, "test")
                seed = group.seed + Provenance.TEST_SEED_OFFSET
                prov = ctx.provenance(self.name, path, seed, inputs=group.instances)
                written.append(write_artifact(path, dumps_dataset(test_ds), prov))
        return written


@register_stage
class LabelStage(Stage):
    name = "label"
    order = 20

    def run(self, ctx: StageContext) -> list[Path]:
        labeling = ctx.config.labeling
        written: list[Path] = []
        for group in ctx.config.groups():
            for k, split in enumerate(("train", "test")):
                source = ctx.workspace.dataset(group.name, split)
                if split == "train":
                    require(source, self.name)
                elif not source.is_file():
                    continue
                seed = derive_seed(group.seed, 1, k)
                labeled, stats = label_samples(
                    read_dataset(source),
                    labeling.solver,
                    budget=labeling.budget(),
                    fallback=labeling.fallback,
                    seed=seed,
                    workers=labeling.workers,
                )
                path = ctx.workspace.dataset(group.name, split, labeled=True)
                prov = ctx.provenance(
                    self.name,
                    path,
                    seed,
                    inputs=(source,),
                    timings={"seconds": stats.total_seconds},
                    extra={"labeling": stats.model_dump(mode="json")},
                )
                written.append(write_artifact(path, dumps_dataset(labeled), prov))
        return written


@register_stage
class TrainStage(Stage):
    name = "train"
    order = 30

    def run(self, ctx: StageContext) -> list[Path]:
        training = ctx.config.training
        written: list[Path] = []
        for group in ctx.config.groups():
            source = require(ctx.workspace.dataset(group.name, "train", labeled=True), self.name)
            seed = derive_seed(group.seed, 2)

            started = time.perf_counter()
            result = hyperparam_search(
                read_dataset(source),
                training.trials,
                seed,
                space=training.space,
                workers=training.workers,
            )
            seconds = time.perf_counter() - started

            test_path = ctx.workspace.dataset(group.name, "test", labeled=True)
            e_test = None
            if test_path.is_file():
                e_test = evaluate_mape(result.best, read_dataset(test_path))
                logger.info("test_error", group=group.name, mape=e_test.mape)

            path = ctx.workspace.model(group.name)
            prov = ctx.provenance(
                self.name, path, seed, inputs=(source,), timings={"seconds": seconds}
            )
            written.append(write_artifact(path, dumps_model(result.best), prov))

            summary = TrainingSummary(
                group=group.name,
                best_trial=result.best_trial,
                trials=result.trials,
                e_test=e_test,
            )
            path = ctx.workspace.search(group.name)
            inputs = (source, test_path) if e_test is not None else (source,)
            prov = ctx.provenance(self.name, path, seed, inputs=inputs)
            written.append(write_artifact(path, dumps_json(summary), prov))
        return written


@register_stage
class SolveStage(Stage):
    name = "solve"
    order = 40

    def run(self, ctx: StageContext) -> list[Path]:
        config = ctx.config
        written: list[Path] = []
        for mode in ctx.modes:
            for source in config.instances:
                inst = load_instance(source)
                side = config.side_constraints.get(inst.name)
                inputs: tuple[Path, ...] = (source,)
                surrogate = None
                if mode == SolveMode.NEO:
                    model_path = ctx.workspace.model(config.group_of(inst.name).name)
                    surrogate = load_model(require(model_path, self.name))
                    inputs = (source, model_path)

                for run in range(config.runs):
                    seed = config.seed + run
                    started = time.perf_counter()
                    milp = (
                        build_neo_model(inst, surrogate, side)
                        if surrogate is not None
                        else build_flp_model(inst, side)
                    )
                    result = solve_model(
                        milp,
                        config.solver.backend,
                        time_limit=config.solver.time_limit,
                        mip_gap=config.solver.mip_gap,
                        threads=config.solver.threads,
                        seed=seed,
                    )
                    t_la = time.perf_counter() - started

                    record = SolveRecord(
                        instance=inst.name,
                        mode=mode,
                        run=run,
                        seed=seed,
                        status=result.status,
                        objective=result.objective,
                        allocation=result.allocation,
                        gamma=result.gamma,
                    )
                    path = ctx.workspace.assignment(mode.value, inst.name, run)
                    prov = ctx.provenance(
                        self.name,
                        path,
                        seed,
                        inputs=inputs,
                        timings={"t_la": t_la, "solver_runtime": result.runtime},
                        extra={"backend": result.backend},
                    )
                    written.append(write_artifact(path, dumps_json(record), prov))
        return written


def _solved_modes(ctx: StageContext, stage: str) -> list[SolveMode]:
    known = {m.value for m in SolveMode}
    modes = [SolveMode(m) for m in ctx.workspace.solved_modes() if m in known]
    if not modes:
        missing = ctx.workspace.root / "solve"
        raise StageError(stage, "no location-allocation decisions found", missing)
    return modes


@register_stage
class RouteStage(Stage):
    name = "route"
    order = 50

    def run(self, ctx: StageContext) -> list[Path]:
        budget = SolverBudget.from_settings()
        written: list[Path] = []
        for mode in _solved_modes(ctx, self.name):
            for source in ctx.config.instances:
                inst = load_instance(source)
                for run in range(ctx.config.runs):
                    assignment = require(
                        ctx.workspace.assignment(mode.value, inst.name, run), self.name
                    )
                    record = SolveRecord.model_validate_json(assignment.read_text(encoding="utf-8"))
                    if record.allocation is None:
                        logger.warning(
                            "run_without_allocation",
                            instance=inst.name,
                            mode=mode.value,
                            run=run,
                            status=record.status.value,
                        )
                        continue

                    started = time.perf_counter()
                    solution = finalize_routes(
                        inst, record.allocation, budget=budget, seed=record.seed
                    )
                    path = ctx.workspace.solution(mode.value, inst.name, run)
                    prov = ctx.provenance(
                        self.name,
                        path,
                        record.seed,
                        inputs=(source, assignment),
                        timings={"t_route": time.perf_counter() - started},
                    )
                    written.append(write_artifact(path, dumps_json(solution), prov))
        return written


def _run_record(
    ctx: StageContext, mode: SolveMode, source: Path, run: int, bks: float
) -> RunRecord | None:
    inst = load_instance(source)
    solution_path = ctx.workspace.solution(mode.value, inst.name, run)
    if not solution_path.is_file():
        return None
    assignment = ctx.workspace.assignment(mode.value, inst.name, run)
    record = SolveRecord.model_validate_json(assignment.read_text(encoding="utf-8"))
    solution = ClrpSolution.model_validate_json(solution_path.read_text(encoding="utf-8"))

    error = None
    if mode == SolveMode.NEO:
        true_costs = {d: routing_cost(inst, solution, d) for d in solution.open_depots}
        try:
            error = pred_error(true_costs, record.gamma, solution.open_depots)
        except MetricError as e:
            logger.warning("pred_error_undefined", instance=inst.name, run=run, reason=e.message)

    t_la = read_provenance(assignment).timings["t_la"]
    t_route = read_provenance(solution_path).timings["t_route"]
    return RunRecord(
        seed=record.seed,
        status=record.status.value,
        objective=solution.total_cost,
        gap=gap_bks(solution.total_cost, bks),
        pred_error=error,
        t_la=t_la,
        t_total=t_la + t_route,
    )


@register_stage
class EvaluateStage(Stage):
    name = "evaluate"
    order = 60

    def run(self, ctx: StageContext) -> list[Path]:
        rows: list[InstanceRow] = []
        for mode in _solved_modes(ctx, self.name):
            for source in ctx.config.instances:
                inst = load_instance(source)
                try:
                    bks = bks_for(inst.name)
                except MetricError:
                    logger.warning("bks_missing", instance=inst.name)
                    continue
                runs = [
                    r
                    for k in range(ctx.config.runs)
                    if (r := _run_record(ctx, mode, source, k, bks)) is not None
                ]
                if not runs:
                    logger.warning("instance_without_solution", instance=inst.name, mode=mode.value)
                    continue
                rows.append(
                    InstanceRow(
                        instance=inst.name,
                        method=METHODS[mode],
                        n_customers=inst.n_customers,
                        bks=bks,
                        runs=tuple(runs),
                    )
                )

        report = build_report(rows)
        path = ctx.workspace.report
        prov = ctx.provenance(self.name, path, ctx.config.seed)
        write_artifact(path, dumps_report(report), prov)
        table = path.with_suffix(".txt")
        table.write_text(render_table(report), encoding="utf-8")
        return [path, table]
