import json
from enum import StrEnum
from pathlib import Path
from typing import Any, Self

import numpy as np
from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    PositiveInt,
    ValidationError,
    model_validator,
)

from neolrp.infrastructure.constants import Training
from neolrp.infrastructure.exceptions import ParseError
from neolrp.infrastructure.files import read_text


class Activation(StrEnum):
    RELU = "relu"
    LINEAR = "linear"


class DenseLayer(BaseModel):
    """y = act(W x + b) with W stored row-major as rows x cols (out x in)."""

    model_config = ConfigDict(frozen=True)

    rows: PositiveInt
    cols: PositiveInt
    weights: tuple[float, ...]
    bias: tuple[float, ...]
    activation: Activation

    @model_validator(mode="after")
    def validate_sizes(self) -> Self:
        if len(self.weights) != self.rows * self.cols:
            raise ValueError(f"expected {self.rows * self.cols} weights, got {len(self.weights)}")
        if len(self.bias) != self.rows:
            raise ValueError(f"expected {self.rows} biases, got {len(self.bias)}")
        return self

    @property
    def matrix(self) -> np.ndarray:
        return np.asarray(self.weights, dtype=np.float64).reshape(self.rows, self.cols)

    @property
    def offset(self) -> np.ndarray:
        return np.asarray(self.bias, dtype=np.float64)

    @classmethod
    def from_arrays(cls, weight: np.ndarray, bias: np.ndarray, activation: Activation) -> Self:
        rows, cols = weight.shape
        return cls(
            rows=rows,
            cols=cols,
            weights=tuple(float(v) for v in np.asarray(weight, dtype=np.float64).ravel()),
            bias=tuple(float(v) for v in np.asarray(bias, dtype=np.float64)),
            activation=activation,
        )

    def apply(self, inputs: np.ndarray) -> np.ndarray:
        out = inputs @ self.matrix.T + self.offset
        if self.activation == Activation.RELU:
            return np.maximum(out, 0.0)
        return out


class TrainingMetadata(BaseModel):
    model_config = ConfigDict(frozen=True)

    seed: int = 0
    epochs: int = 0
    best_epoch: int = 0
    best_val_mse: float | None = None
    train_loss: tuple[float, ...] = ()
    val_loss: tuple[float, ...] = ()
    hyperparams: dict[str, Any] = Field(default_factory=dict)
    n_train: int = 0
    n_val: int = 0


class SurrogateModel(BaseModel):
    model_config = ConfigDict(frozen=True)

    latent_dim: PositiveInt
    phi: tuple[DenseLayer, ...] = Field(..., min_length=1)
    rho: tuple[DenseLayer, ...] = Field(..., min_length=2, max_length=2)
    metadata: TrainingMetadata = Field(default_factory=TrainingMetadata)

    @model_validator(mode="after")
    def validate_architecture(self) -> Self:
        if self.phi[0].cols != Training.FEATURE_DIM:
            raise ValueError(f"phi input width must be {Training.FEATURE_DIM}")
        for prev, layer in zip(self.phi, self.phi[1:], strict=False):
            if layer.cols != prev.rows:
                raise ValueError("phi layer widths do not chain")
        if any(layer.activation != Activation.RELU for layer in self.phi[:-1]):
            raise ValueError("phi hidden layers must be relu")
        if self.phi[-1].activation != Activation.LINEAR or self.phi[-1].rows != self.latent_dim:
            raise ValueError("phi output must be linear with width latent_dim")

        hidden, output = self.rho
        if hidden.cols != self.latent_dim or hidden.activation != Activation.RELU:
            raise ValueError("rho must start with one relu layer reading latent_dim inputs")
        if output.cols != hidden.rows or output.rows != 1 or output.activation != Activation.RELU:
            raise ValueError("rho output must be a single relu unit")
        return self

    @property
    def rho_hidden(self) -> DenseLayer:
        return self.rho[0]

    @property
    def rho_output(self) -> DenseLayer:
        return self.rho[1]

    @property
    def n_hidden_neurons(self) -> int:
        """Hidden units of rho, i.e. the ReLUs that need a binary each when embedded."""
        return self.rho_hidden.rows


def phi_forward(model: SurrogateModel, sigma: np.ndarray) -> np.ndarray:
    out = np.asarray(sigma, dtype=np.float64)
    for layer in model.phi:
        out = layer.apply(out)
    return out


def rho_hidden_forward(model: SurrogateModel, theta: np.ndarray) -> np.ndarray:
    return model.rho_hidden.apply(np.asarray(theta, dtype=np.float64))


def rho_forward(model: SurrogateModel, theta: np.ndarray) -> float:
    hidden = rho_hidden_forward(model, theta)
    return float(model.rho_output.apply(hidden)[0])


def dumps_model(model: SurrogateModel) -> str:
    # stdlib json writes floats with repr, which reads back bit-exact
    return json.dumps(model.model_dump(mode="json"), sort_keys=True, indent=1) + "\n"


def loads_model(text: str) -> SurrogateModel:
    try:
        return SurrogateModel.model_validate(json.loads(text))
    except (json.JSONDecodeError, ValidationError) as e:
        raise ParseError(f"invalid surrogate model: {e}", None, "model file") from e


def save_model(model: SurrogateModel, path: Path) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dumps_model(model), encoding="utf-8")
    return path


def load_model(path: Path) -> SurrogateModel:
    return loads_model(read_text(path, "model file"))
