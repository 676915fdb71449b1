class Milp:
    DEFAULT_TIME_LIMIT = 300.0
    DEFAULT_MIP_GAP = 1e-4
    COEFFICIENT_FLOOR = 1e-12
    INTEGRALITY_THRESHOLD = 0.5
