"""Front quality measures and replicate statistics."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.spatial import cKDTree


@dataclass(frozen=True)
class IgdResult:
    """Inverted generational distance plus the sizes that produced it."""

    value: float
    tf_size: int
    pf_size: int


def igd(true_front, produced_front) -> IgdResult:
    """Mean Euclidean distance from each true-front point to the nearest
    produced point, in (f1, f2) space.

    Lower is better; zero means every true-front point coincides with some
    produced point.  Both fronts must be non-empty (n, 2) point sets.
    """
    tf = np.atleast_2d(np.asarray(true_front, dtype=float))
    pf = np.atleast_2d(np.asarray(produced_front, dtype=float))
    if tf.size == 0 or pf.size == 0:
        raise ValueError("igd requires non-empty fronts")
    if tf.shape[1] != 2 or pf.shape[1] != 2:
        raise ValueError(f"expected (n, 2) fronts, got {tf.shape} and {pf.shape}")
    dists, _ = cKDTree(pf).query(tf, k=1)
    return IgdResult(float(np.mean(dists)), len(tf), len(pf))


def summarize(values) -> tuple[float, float]:
    """Mean and sample standard deviation (n-1 denominator) of replicate values.

    A single value has standard deviation 0 by convention; an empty input is
    a usage error.
    """
    v = np.asarray(values, dtype=float)
    if v.size == 0:
        raise ValueError("summarize requires at least one value")
    mean = float(np.mean(v))
    std = float(np.std(v, ddof=1)) if v.size > 1 else 0.0
    return mean, std
