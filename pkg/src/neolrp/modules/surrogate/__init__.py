from neolrp.modules.surrogate.evaluation import MapeResult, evaluate_mape
from neolrp.modules.surrogate.hyperparams import HyperparamConfig, HyperparamSpace
from neolrp.modules.surrogate.model import (
    Activation,
    DenseLayer,
    SurrogateModel,
    TrainingMetadata,
    dumps_model,
    load_model,
    loads_model,
    phi_forward,
    rho_forward,
    rho_hidden_forward,
    save_model,
)
from neolrp.modules.surrogate.predict import aggregate, predict, predict_many
from neolrp.modules.surrogate.search import SearchResult, TrialRecord, hyperparam_search
from neolrp.modules.surrogate.training import DeepSetRegressor, build_batch, mse, train

__all__ = [
    "Activation",
    "DeepSetRegressor",
    "DenseLayer",
    "HyperparamConfig",
    "HyperparamSpace",
    "MapeResult",
    "SearchResult",
    "SurrogateModel",
    "TrainingMetadata",
    "TrialRecord",
    "aggregate",
    "build_batch",
    "dumps_model",
    "evaluate_mape",
    "hyperparam_search",
    "load_model",
    "loads_model",
    "mse",
    "phi_forward",
    "predict",
    "predict_many",
    "rho_forward",
    "rho_hidden_forward",
    "save_model",
    "train",
]
