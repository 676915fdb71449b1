from collections.abc import Sequence

import numpy as np

from neolrp.infrastructure.exceptions import InvalidInstanceError
from neolrp.modules.instances.model import NormalizedFeatures, Point, VrpInstance


def centered_scale(depot: Point, coords: np.ndarray) -> float:
    """Largest absolute centered coordinate; 1.0 when every point sits on the depot."""
    if coords.size == 0:
        return 1.0
    offsets = np.abs(coords - np.asarray(depot, dtype=np.float64))
    scale = float(offsets.max())
    return scale if scale > 0.0 else 1.0


def scaled_features(
    depot: Point,
    coords: np.ndarray,
    demands: np.ndarray,
    capacity: float,
    scale: float,
) -> np.ndarray:
    sigma = np.empty((coords.shape[0], 3), dtype=np.float64)
    sigma[:, 0] = (coords[:, 0] - depot[0]) / scale
    sigma[:, 1] = (coords[:, 1] - depot[1]) / scale
    sigma[:, 2] = demands / capacity
    return sigma


def customer_arrays(vrp: VrpInstance) -> tuple[np.ndarray, np.ndarray]:
    coords = np.array([[c.x, c.y] for c in vrp.customers], dtype=np.float64).reshape(-1, 2)
    demands = np.array([c.demand for c in vrp.customers], dtype=np.float64)
    return coords, demands


def normalize_features(vrp: VrpInstance) -> NormalizedFeatures:
    """Depot-centred coordinates over P and demands over Q.

    A joint translation of depot and customers leaves sigma and P bit-identical only when the
    coordinates and the offset are exactly representable, as with integer grid coordinates.
    Real-valued coordinates agree up to floating-point rounding of the centring subtraction.
    """
    if vrp.capacity <= 0:
        raise InvalidInstanceError(
            "vehicle capacity must be positive", details={"capacity": vrp.capacity}
        )
    if not vrp.customers:
        raise InvalidInstanceError("feature normalization needs at least one customer")

    coords, demands = customer_arrays(vrp)
    scale = centered_scale(vrp.depot, coords)
    sigma = scaled_features(vrp.depot, coords, demands, float(vrp.capacity), scale)
    return NormalizedFeatures(sigma=sigma, scale=scale)


def canonical_order(sigma: np.ndarray) -> np.ndarray:
    """Row order independent of input order, so downstream sums are bit-reproducible."""
    keys: Sequence[np.ndarray] = (sigma[:, 2], sigma[:, 1], sigma[:, 0])
    return sigma[np.lexsort(keys)]
