import numpy as np


def derive_seed(master: int, *keys: int) -> int:
    sequence = np.random.SeedSequence([master, *keys])
    return int(sequence.generate_state(1, dtype=np.uint32)[0])


def derive_seeds(master: int, count: int) -> list[int]:
    return [derive_seed(master, index) for index in range(count)]


def make_rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)
