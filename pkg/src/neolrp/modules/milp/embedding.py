from dataclasses import dataclass

import numpy as np

from neolrp.modules.instances import ClrpInstance
from neolrp.modules.instances.features import centered_scale, scaled_features
from neolrp.modules.surrogate import SurrogateModel, phi_forward


@dataclass(frozen=True, slots=True)
class EmbeddingTable:
    scales: np.ndarray  # (depots,) P_i over all customers
    sigma: np.ndarray  # (depots, customers, 3)
    latent: np.ndarray  # (depots, customers, L)


def precompute_embeddings(inst: ClrpInstance, model: SurrogateModel) -> EmbeddingTable:
    coords = np.array([[c.x, c.y] for c in inst.customers], dtype=np.float64).reshape(-1, 2)
    demands = np.array([c.demand for c in inst.customers], dtype=np.float64)
    m, n = inst.n_depots, inst.n_customers

    scales = np.ones(m, dtype=np.float64)
    sigma = np.zeros((m, n, 3), dtype=np.float64)
    latent = np.zeros((m, n, model.latent_dim), dtype=np.float64)
    for i, depot in enumerate(inst.depots):
        scales[i] = centered_scale(depot.coord, coords)
        sigma[i] = scaled_features(
            depot.coord, coords, demands, float(inst.vehicle_capacity), scales[i]
        )
        if n:
            latent[i] = phi_forward(model, sigma[i])
    return EmbeddingTable(scales=scales, sigma=sigma, latent=latent)
