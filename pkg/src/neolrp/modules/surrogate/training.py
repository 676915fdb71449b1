import copy
import math
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
import torch
from torch import nn

from neolrp.config import settings
from neolrp.infrastructure.constants import Training
from neolrp.infrastructure.exceptions import TrainingError
from neolrp.infrastructure.observability import get_logger
from neolrp.modules.instances import normalize_features
from neolrp.modules.sampling import VrpDataset, VrpSample
from neolrp.modules.surrogate.hyperparams import HyperparamConfig
from neolrp.modules.surrogate.model import (
    Activation,
    DenseLayer,
    SurrogateModel,
    TrainingMetadata,
)

logger = get_logger(__name__)


class DeepSetRegressor(nn.Module):
    """rho(sum_j mask_j * phi(sigma_j)); padded rows are masked out after phi."""

    def __init__(self, hp: HyperparamConfig) -> None:
        super().__init__()
        phi_layers: list[nn.Module] = []
        width = Training.FEATURE_DIM
        for _ in range(hp.phi_depth):
            phi_layers += [nn.Linear(width, hp.phi_width), nn.ReLU()]
            width = hp.phi_width
        phi_layers.append(nn.Linear(width, hp.latent_dim))
        self.phi = nn.Sequential(*phi_layers)
        self.rho = nn.Sequential(
            nn.Linear(hp.latent_dim, hp.rho_width),
            nn.ReLU(),
            nn.Linear(hp.rho_width, 1),
            nn.ReLU(),
        )

    def forward(self, x: torch.Tensor, mask: torch.Tensor) -> torch.Tensor:
        latent = self.phi(x) * mask.unsqueeze(-1)
        return self.rho(latent.sum(dim=1)).squeeze(-1)

    def linear_layers(self) -> list[nn.Linear]:
        return [m for m in self.modules() if isinstance(m, nn.Linear)]

    def reset_parameters(self, generator: torch.Generator, output_bias: float) -> None:
        """He-uniform weights and zero biases; the output unit starts at the mean target."""
        layers = self.linear_layers()
        with torch.no_grad():
            for layer in layers[:-1]:
                nn.init.kaiming_uniform_(layer.weight, nonlinearity="relu", generator=generator)
                nn.init.zeros_(layer.bias)
            out = layers[-1]
            nn.init.zeros_(out.weight)
            out.bias.fill_(output_bias)

    def to_surrogate(self, hp: HyperparamConfig, metadata: TrainingMetadata) -> SurrogateModel:
        def dense(layer: nn.Linear, activation: Activation) -> DenseLayer:
            return DenseLayer.from_arrays(
                layer.weight.detach().cpu().double().numpy(),
                layer.bias.detach().cpu().double().numpy(),
                activation,
            )

        phi_linear = [m for m in self.phi if isinstance(m, nn.Linear)]
        rho_linear = [m for m in self.rho if isinstance(m, nn.Linear)]
        return SurrogateModel(
            latent_dim=hp.latent_dim,
            phi=tuple(
                dense(layer, Activation.RELU if k < len(phi_linear) - 1 else Activation.LINEAR)
                for k, layer in enumerate(phi_linear)
            ),
            rho=(dense(rho_linear[0], Activation.RELU), dense(rho_linear[1], Activation.RELU)),
            metadata=metadata,
        )


@dataclass(frozen=True, slots=True)
class Batch:
    features: torch.Tensor  # (samples, max customers, 3)
    mask: torch.Tensor  # (samples, max customers)
    targets: torch.Tensor  # label / P per sample

    def __len__(self) -> int:
        return int(self.targets.shape[0])

    def select(self, index: torch.Tensor) -> "Batch":
        return Batch(self.features[index], self.mask[index], self.targets[index])


def build_batch(samples: Sequence[VrpSample], dtype: torch.dtype = torch.float32) -> Batch:
    width = max(s.vrp.size for s in samples)
    features = np.zeros((len(samples), width, Training.FEATURE_DIM), dtype=np.float64)
    mask = np.zeros((len(samples), width), dtype=np.float64)
    targets = np.zeros(len(samples), dtype=np.float64)
    for k, sample in enumerate(samples):
        normalized = normalize_features(sample.vrp)
        size = len(normalized)
        features[k, :size] = normalized.sigma
        mask[k, :size] = 1.0
        targets[k] = float(sample.label or 0.0) / normalized.scale
    return Batch(
        torch.as_tensor(features, dtype=dtype),
        torch.as_tensor(mask, dtype=dtype),
        torch.as_tensor(targets, dtype=dtype),
    )


def mse(net: DeepSetRegressor, batch: Batch) -> torch.Tensor:
    return nn.functional.mse_loss(net(batch.features, batch.mask), batch.targets)


def split_indices(n: int, seed: int) -> tuple[np.ndarray, np.ndarray]:
    order = np.random.default_rng(seed).permutation(n)
    n_val = 0 if n < 2 else max(1, round(n * (1 - Training.TRAIN_FRACTION)))
    return np.sort(order[n_val:]), np.sort(order[:n_val])


def _check_dataset(ds: VrpDataset) -> None:
    if not ds.samples:
        raise TrainingError("cannot train on an empty dataset")
    unlabeled = sum(1 for s in ds.samples if not s.labeled)
    if unlabeled:
        raise TrainingError(f"{unlabeled} samples are unlabeled")
    if any(s.vrp.size == 0 for s in ds.samples):
        raise TrainingError("samples without customers cannot be used for training")


def train(
    ds: VrpDataset,
    hp: HyperparamConfig,
    seed: int,
    *,
    threads: int | None = None,
) -> SurrogateModel:
    _check_dataset(ds)
    torch.set_num_threads(threads or settings.training.torch_threads)

    train_idx, val_idx = split_indices(len(ds.samples), seed)
    train_batch = build_batch([ds.samples[k] for k in train_idx])
    val_batch = build_batch([ds.samples[k] for k in val_idx]) if len(val_idx) else train_batch

    generator = torch.Generator().manual_seed(seed)
    net = DeepSetRegressor(hp)
    net.reset_parameters(generator, output_bias=float(train_batch.targets.mean()))
    optimizer = torch.optim.Adam(net.parameters(), lr=hp.learning_rate)

    best_state = copy.deepcopy(net.state_dict())
    best_val, best_epoch, waited = math.inf, 0, 0
    train_curve: list[float] = []
    val_curve: list[float] = []

    for epoch in range(1, hp.epochs + 1):
        net.train()
        order = torch.randperm(len(train_batch), generator=generator)
        running = 0.0
        for start in range(0, len(train_batch), hp.batch_size):
            batch = train_batch.select(order[start : start + hp.batch_size])
            optimizer.zero_grad()
            loss = mse(net, batch)
            loss.backward()
            optimizer.step()
            running += float(loss.detach()) * len(batch)
        train_curve.append(running / len(train_batch))

        net.eval()
        with torch.no_grad():
            val_loss = float(mse(net, val_batch))
        val_curve.append(val_loss)

        if val_loss < best_val:
            best_val, best_epoch, waited = val_loss, epoch, 0
            best_state = copy.deepcopy(net.state_dict())
        else:
            waited += 1
            if waited >= hp.patience:
                break

    net.load_state_dict(best_state)
    logger.info(
        "surrogate_trained",
        seed=seed,
        epochs=len(val_curve),
        best_epoch=best_epoch,
        best_val_mse=best_val,
        n_train=len(train_idx),
        n_val=len(val_idx),
    )
    return net.to_surrogate(
        hp,
        TrainingMetadata(
            seed=seed,
            epochs=len(val_curve),
            best_epoch=best_epoch,
            best_val_mse=best_val,
            train_loss=tuple(train_curve),
            val_loss=tuple(val_curve),
            hyperparams=hp.model_dump(mode="json"),
            n_train=len(train_idx),
            n_val=len(val_idx),
        ),
    )
