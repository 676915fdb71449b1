from dataclasses import dataclass

import numpy as np

from neolrp.infrastructure.exceptions import ConstructionError
from neolrp.modules.milp.embedding import EmbeddingTable
from neolrp.modules.surrogate import DenseLayer, SurrogateModel


@dataclass(frozen=True, slots=True)
class NeuronBounds:
    """Pre-activation intervals per depot; rows index depots in instance order."""

    input_lower: np.ndarray  # (depots, L) aggregated phi
    input_upper: np.ndarray
    hidden_lower: np.ndarray  # (depots, H) rho hidden pre-activation
    hidden_upper: np.ndarray
    output_lower: np.ndarray  # (depots,) rho output pre-activation, unscaled
    output_upper: np.ndarray

    def contains(
        self, model: SurrogateModel, depot: int, theta: np.ndarray, tol: float = 1e-9
    ) -> bool:
        """True when theta and the rho activations it induces stay inside the depot's boxes."""
        pre_hidden = model.rho_hidden.matrix @ theta + model.rho_hidden.offset
        pre_out = float(
            (model.rho_output.matrix @ np.maximum(pre_hidden, 0.0) + model.rho_output.offset)[0]
        )
        return bool(
            np.all(theta >= self.input_lower[depot] - tol)
            and np.all(theta <= self.input_upper[depot] + tol)
            and np.all(pre_hidden >= self.hidden_lower[depot] - tol)
            and np.all(pre_hidden <= self.hidden_upper[depot] + tol)
            and self.output_lower[depot] - tol <= pre_out <= self.output_upper[depot] + tol
        )


def propagate(
    layer: DenseLayer, lower: np.ndarray, upper: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    """Interval image of W v + b for v in the box [lower, upper]."""
    w = layer.matrix
    w_pos, w_neg = np.maximum(w, 0.0), np.minimum(w, 0.0)
    lo = lower @ w_pos.T + upper @ w_neg.T + layer.offset
    hi = upper @ w_pos.T + lower @ w_neg.T + layer.offset
    return lo, hi


def compute_bounds(model: SurrogateModel, emb: EmbeddingTable) -> NeuronBounds:
    latent = emb.latent
    input_lower = np.minimum(latent, 0.0).sum(axis=1)
    input_upper = np.maximum(latent, 0.0).sum(axis=1)

    hidden_lower, hidden_upper = propagate(model.rho_hidden, input_lower, input_upper)
    out_lower, out_upper = propagate(
        model.rho_output, np.maximum(hidden_lower, 0.0), np.maximum(hidden_upper, 0.0)
    )

    arrays = (input_lower, input_upper, hidden_lower, hidden_upper, out_lower, out_upper)
    if not all(np.all(np.isfinite(a)) for a in arrays):
        raise ConstructionError("neuron bound propagation produced a non-finite bound")
    return NeuronBounds(
        input_lower=input_lower,
        input_upper=input_upper,
        hidden_lower=hidden_lower,
        hidden_upper=hidden_upper,
        output_lower=out_lower[:, 0],
        output_upper=out_upper[:, 0],
    )
