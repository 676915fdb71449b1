class Sampling:
    ATTEMPT_FACTOR = 1000


class Gvs:
    GRID_SIZE = 1000.0
    MAX_CUSTOMERS = 100
    CLUSTER_DECAY = 40.0
    CLUSTER_SEED_MEAN = 5.0
    SMALL_LARGE_SHARE = (0.7, 0.95)
    ROUTE_SIZE_RANGES: dict[str, tuple[float, float]] = {
        "very_short": (3.0, 5.0),
        "short": (5.0, 8.0),
        "medium": (8.0, 12.0),
        "long": (12.0, 16.0),
        "very_long": (16.0, 25.0),
        "ultra_long": (25.0, 50.0),
    }
