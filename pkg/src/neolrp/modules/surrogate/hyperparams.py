from typing import Self

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, PositiveFloat, PositiveInt, model_validator

from neolrp.infrastructure.constants import Hyperparams


class HyperparamConfig(BaseModel):
    """One architecture/optimizer draw."""

    model_config = ConfigDict(frozen=True)

    latent_dim: PositiveInt = 8
    phi_depth: int = Field(2, ge=0)
    phi_width: PositiveInt = 64
    rho_width: PositiveInt = 8
    patience: PositiveInt = 15
    batch_size: PositiveInt = 32
    learning_rate: PositiveFloat = 0.001
    epochs: PositiveInt = 200


class HyperparamSpace(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    latent_dims: tuple[int, ...] = Hyperparams.LATENT_DIMS
    phi_depths: tuple[int, ...] = Hyperparams.PHI_DEPTHS
    phi_widths: tuple[int, ...] = Hyperparams.PHI_WIDTHS
    rho_widths: tuple[int, ...] = Hyperparams.RHO_WIDTHS
    patiences: tuple[int, ...] = Hyperparams.PATIENCES
    batch_sizes: tuple[int, ...] = Hyperparams.BATCH_SIZES
    learning_rates: tuple[float, ...] = Hyperparams.LEARNING_RATES
    epochs: tuple[int, ...] = Hyperparams.EPOCHS

    @model_validator(mode="after")
    def validate_subsets(self) -> Self:
        allowed = {
            "latent_dims": Hyperparams.LATENT_DIMS,
            "phi_depths": Hyperparams.PHI_DEPTHS,
            "phi_widths": Hyperparams.PHI_WIDTHS,
            "rho_widths": Hyperparams.RHO_WIDTHS,
            "patiences": Hyperparams.PATIENCES,
            "batch_sizes": Hyperparams.BATCH_SIZES,
            "learning_rates": Hyperparams.LEARNING_RATES,
            "epochs": Hyperparams.EPOCHS,
        }
        for name, values in allowed.items():
            chosen = getattr(self, name)
            if not chosen:
                raise ValueError(f"{name} must not be empty")
            outside = sorted(set(chosen) - set(values))
            if outside:
                raise ValueError(f"{name} values {outside} are outside {list(values)}")
        return self

    def draw(self, rng: np.random.Generator) -> HyperparamConfig:
        def pick[T](options: tuple[T, ...]) -> T:
            return options[int(rng.integers(len(options)))]

        return HyperparamConfig(
            latent_dim=pick(self.latent_dims),
            phi_depth=pick(self.phi_depths),
            phi_width=pick(self.phi_widths),
            rho_width=pick(self.rho_widths),
            patience=pick(self.patiences),
            batch_size=pick(self.batch_sizes),
            learning_rate=pick(self.learning_rates),
            epochs=pick(self.epochs),
        )
