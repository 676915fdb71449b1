from neolrp.modules.metrics.bks import bks_for, load_bks
from neolrp.modules.metrics.formulas import gap_bks, label_gap, pred_error, share_below
from neolrp.modules.metrics.report import (
    aggregate_rows,
    build_report,
    dumps_report,
    loads_report,
    read_report,
    render_table,
    write_report,
)
from neolrp.modules.metrics.schemas import (
    EvaluationReport,
    InstanceRow,
    Method,
    RunRecord,
    SizeAggregate,
)

__all__ = [
    "EvaluationReport",
    "InstanceRow",
    "Method",
    "RunRecord",
    "SizeAggregate",
    "aggregate_rows",
    "bks_for",
    "build_report",
    "dumps_report",
    "gap_bks",
    "label_gap",
    "load_bks",
    "loads_report",
    "pred_error",
    "read_report",
    "render_table",
    "share_below",
    "write_report",
]
