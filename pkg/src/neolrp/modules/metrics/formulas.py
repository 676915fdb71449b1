from collections.abc import Collection, Iterable, Mapping

from neolrp.infrastructure.exceptions import MetricError


def _relative_percent(value: float, reference: float) -> float:
    return abs(value - reference) / reference * 100.0


def gap_bks(h: float, bks: float) -> float:
    if bks <= 0:
        raise MetricError(f"best known solution must be positive, got {bks}")
    return _relative_percent(h, bks)


def pred_error(
    true_costs: Mapping[int, float],
    predicted: Mapping[int, float],
    open_depots: Collection[int],
) -> float:
    """Surrogate error at the returned solution.

    `true_costs` holds the routed cost of each open depot's customers (vehicle fixed costs
    included, depot fixed cost excluded); `predicted` holds the embedded model's gamma values.
    """
    if not open_depots:
        raise MetricError("prediction error needs at least one open depot")
    missing = sorted(set(open_depots) - set(true_costs))
    if missing:
        raise MetricError(f"no routed cost for open depots {missing}")
    actual = sum(true_costs[i] for i in open_depots)
    if actual <= 0:
        raise MetricError("total routed cost of the open depots must be positive")
    estimate = sum(predicted.get(i, 0.0) for i in open_depots)
    return _relative_percent(estimate, actual)


def label_gap(exact: float, heuristic: float) -> float:
    if exact <= 0:
        raise MetricError(f"exact label must be positive, got {exact}")
    return _relative_percent(heuristic, exact)


def share_below(values: Iterable[float], threshold: float) -> float:
    items = list(values)
    if not items:
        raise MetricError("share of an empty population is undefined")
    return sum(1 for v in items if v < threshold) / len(items)
