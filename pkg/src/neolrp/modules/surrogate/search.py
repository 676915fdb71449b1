import math
from concurrent.futures import ProcessPoolExecutor

import numpy as np
from pydantic import BaseModel, ConfigDict

from neolrp.config import settings
from neolrp.infrastructure.exceptions import TrainingError
from neolrp.infrastructure.observability import get_logger
from neolrp.infrastructure.seeding import derive_seed
from neolrp.modules.sampling import VrpDataset
from neolrp.modules.surrogate.hyperparams import HyperparamConfig, HyperparamSpace
from neolrp.modules.surrogate.model import SurrogateModel
from neolrp.modules.surrogate.training import train

logger = get_logger(__name__)


class TrialRecord(BaseModel):
    model_config = ConfigDict(frozen=True)

    trial: int
    seed: int
    hyperparams: HyperparamConfig
    best_val_mse: float
    epochs: int


class SearchResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    best: SurrogateModel
    best_trial: int
    trials: tuple[TrialRecord, ...]


def _run_trial(args: tuple[VrpDataset, HyperparamConfig, int, int]) -> SurrogateModel:
    ds, hp, seed, threads = args
    return train(ds, hp, seed, threads=threads)


def hyperparam_search(
    ds: VrpDataset,
    n_trials: int,
    seed: int,
    *,
    space: HyperparamSpace | None = None,
    workers: int | None = None,
) -> SearchResult:
    if n_trials < 1:
        raise TrainingError("hyperparameter search needs at least one trial")
    space = space or HyperparamSpace()
    workers = workers or settings.training.workers
    threads = settings.training.torch_threads

    rng = np.random.default_rng(seed)
    jobs = [(ds, space.draw(rng), derive_seed(seed, t), threads) for t in range(n_trials)]
    if workers > 1 and n_trials > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            models = list(pool.map(_run_trial, jobs))
    else:
        models = [_run_trial(job) for job in jobs]

    trials: list[TrialRecord] = []
    for t, ((_, hp, trial_seed, _), model) in enumerate(zip(jobs, models, strict=True)):
        val = model.metadata.best_val_mse
        record = TrialRecord(
            trial=t,
            seed=trial_seed,
            hyperparams=hp,
            best_val_mse=math.inf if val is None else val,
            epochs=model.metadata.epochs,
        )
        trials.append(record)
        logger.info(
            "trial_finished", trial=t, best_val_mse=record.best_val_mse, epochs=record.epochs
        )

    best_trial = min(range(n_trials), key=lambda t: (trials[t].best_val_mse, t))
    logger.info("search_finished", trials=n_trials, best_trial=best_trial)
    return SearchResult(best=models[best_trial], best_trial=best_trial, trials=tuple(trials))
