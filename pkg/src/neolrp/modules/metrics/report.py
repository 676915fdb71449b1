import json
import statistics
from collections import defaultdict
from collections.abc import Iterable
from pathlib import Path

from pydantic import ValidationError

from neolrp.infrastructure.exceptions import ParseError
from neolrp.infrastructure.files import read_text
from neolrp.modules.metrics.schemas import EvaluationReport, InstanceRow, Method, SizeAggregate


def aggregate_rows(rows: Iterable[InstanceRow]) -> tuple[SizeAggregate, ...]:
    groups: dict[tuple[Method, int], list[InstanceRow]] = defaultdict(list)
    for row in rows:
        groups[row.method, row.n_customers].append(row)

    aggregates = []
    for (method, n_customers), members in sorted(groups.items()):
        gaps = [r.mean_gap for r in members]
        preds = [r.mean_pred_error for r in members if r.mean_pred_error is not None]
        aggregates.append(
            SizeAggregate(
                method=method,
                n_customers=n_customers,
                count=len(members),
                mean_gap=statistics.fmean(gaps),
                median_gap=statistics.median(gaps),
                mean_pred_error=statistics.fmean(preds) if preds else None,
                median_pred_error=statistics.median(preds) if preds else None,
                mean_t_la=statistics.fmean(r.mean_t_la for r in members),
                mean_t_total=statistics.fmean(r.mean_t_total for r in members),
            )
        )
    return tuple(aggregates)


def build_report(rows: Iterable[InstanceRow]) -> EvaluationReport:
    ordered = tuple(sorted(rows, key=lambda r: (r.method.value, r.n_customers, r.instance)))
    return EvaluationReport(rows=ordered, aggregates=aggregate_rows(ordered))


def dumps_report(report: EvaluationReport) -> str:
    return json.dumps(report.model_dump(mode="json"), sort_keys=True, indent=2) + "\n"


def loads_report(text: str) -> EvaluationReport:
    try:
        return EvaluationReport.model_validate_json(text)
    except ValidationError as e:
        raise ParseError(f"invalid evaluation report: {e}", None, "report file") from e


def write_report(report: EvaluationReport, path: Path) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dumps_report(report), encoding="utf-8")
    path.with_suffix(".txt").write_text(render_table(report), encoding="utf-8")
    return path


def read_report(path: Path) -> EvaluationReport:
    return loads_report(read_text(path, "report file"))


_HEADER = ("Instance", "BKS", "E_gap(%)", "E_pred(%)", "T_LA(s)", "T_total(s)")


def _cells(
    label: str, bks: str, gap: float, pred: float | None, t_la: float, t_total: float
) -> tuple[str, ...]:
    # FLP-VRP has no prediction to compare
    pred_cell = "-" if pred is None else f"{pred:.2f}"
    return (label, bks, f"{gap:.2f}", pred_cell, f"{t_la:.2f}", f"{t_total:.2f}")


def _align(line: tuple[str, ...], widths: list[int]) -> str:
    return "  ".join(
        cell.ljust(widths[k]) if k == 0 else cell.rjust(widths[k]) for k, cell in enumerate(line)
    )


def render_table(report: EvaluationReport) -> str:
    """Plain-text table, one block per method, rows then per-size averages."""
    blocks: list[str] = []
    for method in Method:
        rows = [r for r in report.rows if r.method == method]
        if not rows:
            continue
        body = [
            _cells(
                r.instance,
                f"{r.bks:,.0f}",
                r.mean_gap,
                r.mean_pred_error,
                r.mean_t_la,
                r.mean_t_total,
            )
            for r in rows
        ]
        body += [
            _cells(
                f"avg n={a.n_customers}",
                "",
                a.mean_gap,
                a.mean_pred_error,
                a.mean_t_la,
                a.mean_t_total,
            )
            for a in report.aggregates
            if a.method == method
        ]
        widths = [max(len(line[k]) for line in (_HEADER, *body)) for k in range(len(_HEADER))]
        lines = [_align(line, widths) for line in (_HEADER, *body)]
        rule = "-" * len(lines[0])
        blocks.append("\n".join([method.value, rule, lines[0], rule, *lines[1:], rule]))
    return "\n\n".join(blocks) + "\n"
