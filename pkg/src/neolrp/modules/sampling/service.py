from collections.abc import Collection, Hashable, Sequence

from neolrp.infrastructure.constants import Provenance
from neolrp.infrastructure.exceptions import ConfigError
from neolrp.modules.instances import ClrpInstance
from neolrp.modules.sampling.gvs import gvs_sample
from neolrp.modules.sampling.schemas import SamplingConfig, SamplingMethod, VrpDataset
from neolrp.modules.sampling.subsampling import pscc_sample, rscc_sample


def sample_dataset(
    config: SamplingConfig,
    sources: Sequence[ClrpInstance],
    *,
    n_data: int | None = None,
    seed: int | None = None,
    config_hash: str = "",
    exclude: Collection[Hashable] = (),
) -> VrpDataset:
    n = n_data if n_data is not None else config.n_data
    s = seed if seed is not None else config.seed

    match config.method:
        case SamplingMethod.GVS:
            if config.gvs is None:
                raise ConfigError("GVS sampling needs generator parameters")
            return gvs_sample(config.gvs, n, s, config_hash=config_hash, exclude=exclude)
        case SamplingMethod.RSCC | SamplingMethod.PSCC:
            if not sources:
                raise ConfigError(f"{config.method.value} sampling needs source instances")
            sampler = rscc_sample if config.method == SamplingMethod.RSCC else pscc_sample
            return sampler(sources, n, s, config_hash=config_hash, exclude=exclude)


def sample_test_dataset(
    config: SamplingConfig,
    sources: Sequence[ClrpInstance],
    *,
    train: VrpDataset | None = None,
    config_hash: str = "",
) -> VrpDataset | None:
    """Held-out set drawn with an offset seed, disjoint from `train` when given."""
    if config.n_test == 0:
        return None
    exclude = {s.vrp.dedup_key() for s in train.samples} if train is not None else set()
    return sample_dataset(
        config,
        sources,
        n_data=config.n_test,
        seed=config.seed + Provenance.TEST_SEED_OFFSET,
        config_hash=config_hash,
        exclude=exclude,
    )
