from neolrp.modules.milp.backends import (
    MilpBackend,
    MilpSolution,
    PulpBackend,
    SolveStatus,
    get_registry,
    reset_registry,
)
from neolrp.modules.milp.bounds import NeuronBounds, compute_bounds, propagate
from neolrp.modules.milp.builder import (
    SideConstraints,
    add_depot_restriction,
    add_incompatibility,
    apply_side_constraints,
    build_flp_model,
    build_neo_model,
    fix_assignment,
)
from neolrp.modules.milp.embedding import EmbeddingTable, precompute_embeddings
from neolrp.modules.milp.model import (
    Constraint,
    MilpModel,
    ModelKind,
    Sense,
    Variable,
    VarKind,
    dump_lp,
)
from neolrp.modules.milp.solve import MilpResult, extract_result, resolve_backend, solve_model

__all__ = [
    "Constraint",
    "EmbeddingTable",
    "MilpBackend",
    "MilpModel",
    "MilpResult",
    "MilpSolution",
    "ModelKind",
    "NeuronBounds",
    "PulpBackend",
    "Sense",
    "SideConstraints",
    "SolveStatus",
    "VarKind",
    "Variable",
    "add_depot_restriction",
    "add_incompatibility",
    "apply_side_constraints",
    "build_flp_model",
    "build_neo_model",
    "compute_bounds",
    "dump_lp",
    "extract_result",
    "fix_assignment",
    "get_registry",
    "precompute_embeddings",
    "propagate",
    "reset_registry",
    "resolve_backend",
    "solve_model",
]
