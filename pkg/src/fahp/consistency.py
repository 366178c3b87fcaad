"""Consistency checking of crisp comparison matrices.

The ratio CR = CI / RI gates whether a judgment matrix is usable;
CI = (lambda_max - n) / (n - 1) and RI is Saaty's random index for the
matrix order. Matrices of order 1 and 2 are always consistent (RI = 0,
CR defined as 0).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ShapeError
from .matrix import CrispMatrix
from .tfn import nearest_score

DEFAULT_CR_THRESHOLD = 0.1

# Saaty random indices for orders 1..15. Some printings carry 2.56 at
# order 13, which breaks the monotone sequence; 1.56 is the sequence value.
RI_TABLE = {
    1: 0.0, 2: 0.0, 3: 0.52, 4: 0.89, 5: 1.11,
    6: 1.25, 7: 1.35, 8: 1.40, 9: 1.45, 10: 1.49,
    11: 1.52, 12: 1.54, 13: 1.56, 14: 1.58, 15: 1.59,
}

_ZERO_MAGNITUDE = 1e-9


@dataclass(frozen=True)
class ConsistencyReport:
    """Consistency diagnostics for one comparison matrix."""

    lambda_max: float
    ci: float
    ri: float
    cr: float
    acceptable: bool
    threshold: float
    worst_entries: tuple[tuple[int, int, float], ...]

    def as_dict(self) -> dict:
        return {
            "lambda_max": self.lambda_max,
            "ci": self.ci,
            "ri": self.ri,
            "cr": self.cr,
            "acceptable": self.acceptable,
            "threshold": self.threshold,
            "worst_entries": [list(e) for e in self.worst_entries],
        }


def random_index(order: int) -> float:
    """Random index RI for a matrix order in 1..15."""
    if order not in RI_TABLE:
        raise ValueError(f"random index is defined for orders 1..15, got {order}")
    return RI_TABLE[order]


def _check_weights(matrix: CrispMatrix, weights) -> np.ndarray:
    w = np.asarray(weights, dtype=float)
    if w.shape != (matrix.order,):
        raise ShapeError(
            f"weight vector length {w.shape} does not match matrix order {matrix.order}"
        )
    if np.any(w <= 0):
        raise ValueError("weights must be strictly positive")
    if abs(w.sum() - 1.0) > 1e-9:
        raise ValueError(f"weights must sum to 1, got {w.sum()!r}")
    return w


def lambda_max_estimate(matrix: CrispMatrix, weights) -> float:
    """Principal-eigenvalue estimate: mean over rows of (A w)_i / w_i."""
    w = _check_weights(matrix, weights)
    return float(np.mean(matrix.values @ w / w))


def _ranked_cells(matrix: CrispMatrix, weights) -> list[tuple[int, int, float]]:
    """Inconsistent cells by |log(a_ij * w_j / w_i)| descending.

    Cells that agree with the weights (magnitude below 1e-9) are dropped.
    Magnitudes are compared at 1e-12 resolution so that mathematically
    tied cells keep a deterministic row-major order instead of one set by
    floating-point noise.
    """
    w = np.asarray(weights, dtype=float)
    a = matrix.values
    cells = []
    for i in range(matrix.order):
        for j in range(i + 1, matrix.order):
            magnitude = abs(float(np.log(a[i, j] * w[j] / w[i])))
            if magnitude >= _ZERO_MAGNITUDE:
                cells.append((i, j, magnitude))
    cells.sort(key=lambda c: -round(c[2], 12))
    return cells


def consistency_ratio(
    matrix: CrispMatrix,
    weights,
    threshold: float = DEFAULT_CR_THRESHOLD,
) -> ConsistencyReport:
    """Full consistency report for a crisp matrix under the given weights."""
    if threshold <= 0:
        raise ValueError(f"threshold must be positive, got {threshold}")
    n = matrix.order
    if n == 1:
        return ConsistencyReport(1.0, 0.0, 0.0, 0.0, True, threshold, ())
    lam = lambda_max_estimate(matrix, weights)
    ci = (lam - n) / (n - 1)
    ri = random_index(n)
    cr = ci / ri if ri > 0 else 0.0
    cells = _ranked_cells(matrix, weights)
    return ConsistencyReport(
        lambda_max=lam,
        ci=ci,
        ri=ri,
        cr=cr,
        acceptable=cr < threshold,
        threshold=threshold,
        worst_entries=tuple(cells),
    )


def locate_inconsistency(matrix: CrispMatrix, weights, k: int) -> list[tuple[int, int, int]]:
    """Top-k most inconsistent cells with a suggested replacement score.

    Each result is (i, j, signed score) where the score is the scale value
    nearest to the weight ratio w_i / w_j. Cells that already agree with
    the weights (magnitude below 1e-9) are never suggested.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    w = _check_weights(matrix, weights)
    cells = _ranked_cells(matrix, w)
    return [(i, j, nearest_score(w[i] / w[j])) for i, j, _mag in cells[:k]]
