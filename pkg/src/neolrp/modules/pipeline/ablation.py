import statistics
from pathlib import Path
from typing import Any

from neolrp.infrastructure.exceptions import ConfigError
from neolrp.infrastructure.observability import get_logger
from neolrp.modules.metrics import label_gap, read_report, share_below
from neolrp.modules.pipeline.artifacts import (
    Workspace,
    dumps_json,
    require,
    write_artifact,
)
from neolrp.modules.pipeline.base import StageContext, run_all_stages
from neolrp.modules.pipeline.config import (
    AblationAxis,
    ExperimentConfig,
    SolveMode,
    parse_experiment,
)
from neolrp.modules.pipeline.schemas import (
    AblationCell,
    AblationReport,
    LabelGapSummary,
    TrainingSummary,
)
from neolrp.modules.sampling import LabelSolver, read_dataset

logger = get_logger(__name__)

LABEL_GAP_THRESHOLD = 5.0


def cell_config(config: ExperimentConfig, axis: AblationAxis, value: str | int) -> ExperimentConfig:
    """The experiment with one axis pinned, rooted under the parent's `ablate/` directory."""
    data: dict[str, Any] = config.model_dump(mode="json")
    match axis:
        case AblationAxis.SAMPLING:
            data["sampling"]["method"] = value
        case AblationAxis.SAMPLE_SIZE:
            data["sampling"]["n_data"] = value
        case AblationAxis.LABELER:
            data["labeling"]["solver"] = value
        case AblationAxis.SURROGATE_MODE:
            data["surrogate_mode"] = value
    cell_root = Workspace(config.root).ablation_cell(axis.value, value)
    data.update(
        name=cell_root.name,
        output_dir=str(cell_root.parent),
        modes=[SolveMode.NEO.value],
        ablation=None,
    )
    return parse_experiment(data)


def _median(values: list[float]) -> float | None:
    return statistics.median(values) if values else None


def summarize_cell(config: ExperimentConfig, value: str | int) -> AblationCell:
    workspace = Workspace(config.root)
    report = read_report(require(workspace.report, "ablate"))
    errors = [r.mean_pred_error for r in report.rows if r.mean_pred_error is not None]

    e_test: list[float] = []
    for group in config.groups():
        summary_path = workspace.search(group.name)
        if summary_path.is_file():
            summary = TrainingSummary.model_validate_json(summary_path.read_text(encoding="utf-8"))
            if summary.e_test is not None:
                e_test.append(summary.e_test.mape)

    return AblationCell(
        value=str(value),
        rows=len(report.rows),
        median_gap=_median([r.mean_gap for r in report.rows]),
        median_pred_error=_median(errors),
        e_test=_median(e_test),
    )


def compare_labelers(exact: ExperimentConfig, heuristic: ExperimentConfig) -> LabelGapSummary:
    """Label gap over samples both cells drew identically and the exact cell solved exactly."""
    gaps: list[float] = []
    for group in exact.groups():
        ds_exact = read_dataset(
            require(Workspace(exact.root).dataset(group.name, "train", labeled=True), "ablate")
        )
        ds_heur = read_dataset(
            require(Workspace(heuristic.root).dataset(group.name, "train", labeled=True), "ablate")
        )
        for a, b in zip(ds_exact.samples, ds_heur.samples, strict=True):
            if a.label_solver != LabelSolver.EXACT or a.label is None or b.label is None:
                continue
            if a.vrp != b.vrp:
                continue
            gaps.append(label_gap(a.label, b.label))

    if not gaps:
        raise ConfigError("labeler ablation produced no exactly labeled samples to compare")
    return LabelGapSummary(
        compared=len(gaps),
        median=statistics.median(gaps),
        mean=statistics.fmean(gaps),
        share_below_threshold=share_below(gaps, LABEL_GAP_THRESHOLD),
        threshold=LABEL_GAP_THRESHOLD,
    )


def render_ablation(report: AblationReport) -> str:
    def cell(value: float | None) -> str:
        return "-" if value is None else f"{value:.2f}"

    header = (report.axis.value, "rows", "E_gap med(%)", "E_pred med(%)", "E_test(%)")
    body = [
        (c.value, str(c.rows), cell(c.median_gap), cell(c.median_pred_error), cell(c.e_test))
        for c in report.cells
    ]
    widths = [max(len(line[k]) for line in (header, *body)) for k in range(len(header))]
    lines = ["  ".join(v.rjust(widths[k]) for k, v in enumerate(line)) for line in (header, *body)]
    if report.label_gap is not None:
        gap = report.label_gap
        lines.append(
            f"label gap: median {gap.median:.2f}%, {gap.share_below_threshold:.1%} of "
            f"{gap.compared} samples below {gap.threshold:.0f}%"
        )
    return "\n".join(lines) + "\n"


def run_ablation(config: ExperimentConfig) -> list[Path]:
    if config.ablation is None:
        raise ConfigError("experiment has no [ablation] section")
    axis = config.ablation.axis

    cells: list[AblationCell] = []
    configs: dict[str, ExperimentConfig] = {}
    for value in config.ablation.values:
        cell = cell_config(config, axis, value)
        logger.info("ablation_cell_started", axis=axis.value, value=value)
        run_all_stages(StageContext.from_config(cell))
        cells.append(summarize_cell(cell, value))
        configs[str(value)] = cell

    label_summary = None
    if axis == AblationAxis.LABELER and {s.value for s in LabelSolver} <= set(configs):
        label_summary = compare_labelers(
            configs[LabelSolver.EXACT.value], configs[LabelSolver.HEURISTIC.value]
        )

    report = AblationReport(axis=axis, cells=tuple(cells), label_gap=label_summary)
    ctx = StageContext.from_config(config)
    path = ctx.workspace.ablation_report
    prov = ctx.provenance(
        "ablate",
        path,
        config.seed,
        inputs=tuple(Workspace(c.root).report for c in configs.values()),
    )
    write_artifact(path, dumps_json(report), prov)
    table = path.with_suffix(".txt")
    table.write_text(render_ablation(report), encoding="utf-8")
    logger.info("ablation_finished", axis=axis.value, cells=len(cells))
    return [path, table]
