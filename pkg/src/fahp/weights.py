"""Priority weight derivation from fuzzy comparison matrices.

Two methods are provided. The default crispifies with the modal value
and takes row geometric means; it is the method that reproduces the
bundled reference dataset's weight vectors. The fuzzy-geometric-mean
variant keeps the arithmetic fuzzy until a final centroid defuzzification
and is included so users can gauge method sensitivity.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .matrix import FuzzyComparisonMatrix, crispify
from .tfn import DefuzzMethod


class DerivationMethod(Enum):
    GM_MIDDLE = "gm-middle"
    BUCKLEY_CENTROID = "buckley"


@dataclass(frozen=True)
class WeightVector:
    """Normalized priorities of sibling items under one hierarchy node."""

    node_id: str
    method: str
    item_ids: tuple[str, ...]
    values: tuple[float, ...]

    def __post_init__(self):
        if len(self.item_ids) != len(self.values):
            raise ValueError("item ids and values must have the same length")
        if any(v < 0 for v in self.values):
            raise ValueError(f"weights must be non-negative: {self.values}")
        if abs(sum(self.values) - 1.0) > 1e-9:
            raise ValueError(f"weights must sum to 1, got {sum(self.values)!r}")

    def __getitem__(self, item_id: str) -> float:
        return self.values[self.item_ids.index(item_id)]

    def as_dict(self) -> dict[str, float]:
        return dict(zip(self.item_ids, self.values))

    def as_array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=float)


def _normalized(raw: np.ndarray) -> tuple[float, ...]:
    w = raw / raw.sum()
    return tuple(float(x) for x in w)


def derive_gm_middle(matrix: FuzzyComparisonMatrix, node_id: str = "") -> WeightVector:
    """Row geometric means of the modal-value crisp matrix, normalized."""
    crisp = crispify(matrix, DefuzzMethod.MIDDLE)
    gm = np.exp(np.log(crisp.values).mean(axis=1))
    return WeightVector(
        node_id=node_id,
        method=DerivationMethod.GM_MIDDLE.value,
        item_ids=matrix.item_ids,
        values=_normalized(gm),
    )


def derive_buckley(matrix: FuzzyComparisonMatrix, node_id: str = "") -> WeightVector:
    """Fuzzy row geometric means, fuzzy weights, centroid defuzzification.

    r_i = (prod_j a_ij)^(1/n) componentwise, w_i = r_i * (sum_k r_k)^-1,
    then centroid and renormalization.
    """
    n = matrix.order
    rows = []
    for i in range(n):
        acc = matrix[i, 0]
        for j in range(1, n):
            acc = acc * matrix[i, j]
        rows.append(acc.nth_root(n))
    total_l = sum(r.l for r in rows)
    total_m = sum(r.m for r in rows)
    total_u = sum(r.u for r in rows)
    # (sum r)^-1 swaps the bounds
    crisp = np.array(
        [(r.l / total_u + r.m / total_m + r.u / total_l) / 3.0 for r in rows]
    )
    return WeightVector(
        node_id=node_id,
        method=DerivationMethod.BUCKLEY_CENTROID.value,
        item_ids=matrix.item_ids,
        values=_normalized(crisp),
    )


_DERIVERS = {
    DerivationMethod.GM_MIDDLE: derive_gm_middle,
    DerivationMethod.BUCKLEY_CENTROID: derive_buckley,
}


def derive_weights(
    matrix: FuzzyComparisonMatrix,
    method: DerivationMethod = DerivationMethod.GM_MIDDLE,
    node_id: str = "",
) -> WeightVector:
    return _DERIVERS[method](matrix, node_id)
