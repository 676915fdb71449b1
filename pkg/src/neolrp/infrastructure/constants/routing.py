class Routing:
    EXACT_LIMIT = 10
    MAX_ITERATIONS = 20_000
    RESTARTS = 20
    PERTURBATION_SIZE = 3
    MAX_SEGMENT_LENGTH = 3
    IMPROVEMENT_EPSILON = 1e-9
    PRODHON_SCALE = 100
