from collections.abc import Iterable

import numpy as np

from neolrp.infrastructure.exceptions import ShapeError
from neolrp.modules.instances import VrpInstance, canonical_order, normalize_features
from neolrp.modules.surrogate.model import SurrogateModel, phi_forward, rho_forward


def aggregate(model: SurrogateModel, sigma: np.ndarray) -> np.ndarray:
    """Sum of phi over customers, taken in canonical row order."""
    if sigma.ndim != 2 or sigma.shape[1] != model.phi[0].cols:
        width = sigma.shape[1] if sigma.ndim == 2 else sigma.ndim
        raise ShapeError(model.phi[0].cols, width, "surrogate input features")
    return phi_forward(model, canonical_order(sigma)).sum(axis=0)


def predict(model: SurrogateModel, vrp: VrpInstance) -> float:
    features = normalize_features(vrp)
    theta = aggregate(model, features.sigma)
    return features.scale * rho_forward(model, theta)


def predict_many(model: SurrogateModel, vrps: Iterable[VrpInstance]) -> np.ndarray:
    return np.array([predict(model, vrp) for vrp in vrps], dtype=np.float64)
