from neolrp.modules.sampling.dataset import (
    dumps_dataset,
    loads_dataset,
    read_dataset,
    write_dataset,
)
from neolrp.modules.sampling.gvs import generate_vrp, gvs_sample, parse_gvs_params
from neolrp.modules.sampling.schemas import (
    CustomerPositioning,
    DatasetHeader,
    DemandScheme,
    DepotPositioning,
    GvsParams,
    LabelSolver,
    RouteSizeClass,
    SamplingConfig,
    SamplingMethod,
    VrpDataset,
    VrpSample,
)
from neolrp.modules.sampling.service import sample_dataset, sample_test_dataset
from neolrp.modules.sampling.subsampling import nearest_feasible_depot, pscc_sample, rscc_sample

__all__ = [
    "CustomerPositioning",
    "DatasetHeader",
    "DemandScheme",
    "DepotPositioning",
    "GvsParams",
    "LabelSolver",
    "RouteSizeClass",
    "SamplingConfig",
    "SamplingMethod",
    "VrpDataset",
    "VrpSample",
    "dumps_dataset",
    "generate_vrp",
    "gvs_sample",
    "loads_dataset",
    "nearest_feasible_depot",
    "parse_gvs_params",
    "pscc_sample",
    "read_dataset",
    "rscc_sample",
    "sample_dataset",
    "sample_test_dataset",
    "write_dataset",
]
