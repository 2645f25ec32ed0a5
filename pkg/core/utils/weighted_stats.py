# ==============================================================================
# weighted_stats.py — Survey-weighted descriptive statistics
# ==============================================================================
# Purpose: Weighted mean, standard deviation and quantiles over sampling weights
# Sections: Imports, Helpers, Statistics
# ==============================================================================

# Standard Library --------------------------------------------------------------
from typing import Sequence, Tuple

# Third Party -------------------------------------------------------------------
import numpy as np


def _as_arrays(values: Sequence[float], weights: Sequence[float]) -> Tuple[np.ndarray, np.ndarray]:
    points = np.asarray(values, dtype=float)
    w = np.asarray(weights, dtype=float)
    if points.shape != w.shape:
        raise ValueError("values and weights must have the same length")
    if points.size == 0:
        raise ValueError("cannot summarize an empty sample")
    if np.any(w < 0) or w.sum() <= 0:
        raise ValueError("weights must be non-negative with a positive total")
    return points, w


def weighted_mean(values: Sequence[float], weights: Sequence[float]) -> float:
    points, w = _as_arrays(values, weights)
    return float(np.dot(points, w) / w.sum())


def weighted_std(values: Sequence[float], weights: Sequence[float]) -> float:
    """Population standard deviation under normalized weights."""
    points, w = _as_arrays(values, weights)
    mean = np.dot(points, w) / w.sum()
    return float(np.sqrt(np.dot((points - mean) ** 2, w) / w.sum()))


def weighted_quantile(values: Sequence[float], weights: Sequence[float], q: float) -> float:
    """Smallest value whose cumulative weight reaches q of the total weight."""
    if not 0.0 <= q <= 1.0:
        raise ValueError("q must lie in [0, 1]")
    points, w = _as_arrays(values, weights)
    order = np.argsort(points, kind="stable")
    points, w = points[order], w[order]
    cumulative = np.cumsum(w)
    threshold = q * cumulative[-1]
    # relative slack keeps exact halves on the lower value despite float sums
    index = int(np.searchsorted(cumulative, threshold - 1e-12 * cumulative[-1], side="left"))
    return float(points[min(index, points.size - 1)])


def weighted_median(values: Sequence[float], weights: Sequence[float]) -> float:
    return weighted_quantile(values, weights, 0.5)
