from neolrp.modules.pipeline import stages as _stages  # noqa: F401  registers the stages
from neolrp.modules.pipeline.ablation import (
    cell_config,
    compare_labelers,
    render_ablation,
    run_ablation,
    summarize_cell,
)
from neolrp.modules.pipeline.artifacts import (
    ProvenanceRecord,
    Workspace,
    provenance_path,
    read_provenance,
    write_artifact,
)
from neolrp.modules.pipeline.base import (
    Stage,
    StageContext,
    get_all_stages,
    get_stage,
    get_stage_names,
    register_stage,
    run_all_stages,
    run_stage,
)
from neolrp.modules.pipeline.config import (
    AblationAxis,
    AblationConfig,
    ExperimentConfig,
    InstanceGroup,
    LabelingConfig,
    SolveMode,
    SolverConfig,
    SurrogateMode,
    TrainingConfig,
    load_experiment,
    parse_experiment,
)
from neolrp.modules.pipeline.schemas import (
    AblationCell,
    AblationReport,
    LabelGapSummary,
    SolveRecord,
    TrainingSummary,
)

__all__ = [
    "AblationAxis",
    "AblationCell",
    "AblationConfig",
    "AblationReport",
    "ExperimentConfig",
    "InstanceGroup",
    "LabelGapSummary",
    "LabelingConfig",
    "ProvenanceRecord",
    "SolveMode",
    "SolveRecord",
    "SolverConfig",
    "Stage",
    "StageContext",
    "SurrogateMode",
    "TrainingConfig",
    "TrainingSummary",
    "Workspace",
    "cell_config",
    "compare_labelers",
    "get_all_stages",
    "get_stage",
    "get_stage_names",
    "load_experiment",
    "parse_experiment",
    "provenance_path",
    "read_provenance",
    "register_stage",
    "render_ablation",
    "run_ablation",
    "run_all_stages",
    "run_stage",
    "summarize_cell",
    "write_artifact",
]
