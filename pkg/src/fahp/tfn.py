"""Triangular fuzzy numbers and the 1..9 linguistic judgment scale.

A judgment on the nine-point scale maps to a triangular fuzzy number
(l, m, u); the reciprocal direction uses (1/u, 1/m, 1/l). Reciprocal
values are computed from the exact fractions, never re-parsed from
rounded decimals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum


class DefuzzMethod(Enum):
    """How to collapse a fuzzy number to a single crisp value."""

    MIDDLE = "middle"      # modal value m
    CENTROID = "centroid"  # (l + m + u) / 3


@dataclass(frozen=True)
class TFN:
    """Triangular fuzzy number with lower, modal and upper bounds."""

    l: float
    m: float
    u: float

    def __post_init__(self):
        if not (self.l > 0):
            raise ValueError(f"TFN lower bound must be positive, got {self.l}")
        if not (self.l <= self.m <= self.u):
            raise ValueError(f"TFN bounds must satisfy l <= m <= u, got {self}")

    def reciprocal(self) -> TFN:
        return TFN(1.0 / self.u, 1.0 / self.m, 1.0 / self.l)

    def __mul__(self, other: TFN) -> TFN:
        return TFN(self.l * other.l, self.m * other.m, self.u * other.u)

    def nth_root(self, n: int) -> TFN:
        if n < 1:
            raise ValueError(f"root order must be >= 1, got {n}")
        e = 1.0 / n
        return TFN(self.l ** e, self.m ** e, self.u ** e)

    def defuzzify(self, method: DefuzzMethod = DefuzzMethod.MIDDLE) -> float:
        if method is DefuzzMethod.MIDDLE:
            return self.m
        return (self.l + self.m + self.u) / 3.0

    def is_close(self, other: TFN, tol: float = 1e-9) -> bool:
        return (
            abs(self.l - other.l) <= tol
            and abs(self.m - other.m) <= tol
            and abs(self.u - other.u) <= tol
        )

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.l, self.m, self.u)


ONE = TFN(1.0, 1.0, 1.0)

# Nine-point scale: score -> (l, m, u). Score 9 saturates at the scale
# ceiling, hence (8, 9, 9) rather than (8, 9, 10).
SCALE: dict[int, TFN] = {
    1: TFN(1, 1, 1),
    2: TFN(1, 2, 3),
    3: TFN(2, 3, 4),
    4: TFN(3, 4, 5),
    5: TFN(4, 5, 6),
    6: TFN(5, 6, 7),
    7: TFN(6, 7, 8),
    8: TFN(7, 8, 9),
    9: TFN(8, 9, 9),
}

LINGUISTIC_TERMS: dict[int, str] = {
    1: "Equally important",
    2: "Intermediate values",
    3: "Weakly important",
    4: "Intermediate values",
    5: "Essentially important",
    6: "Intermediate values",
    7: "Very strongly important",
    8: "Intermediate values",
    9: "Absolutely important",
}


def scale_tfn(score: int) -> TFN:
    """Fuzzy value for a precise score in 1..9.

    Raises ValueError for anything outside the scale.
    """
    if score not in SCALE:
        raise ValueError(f"precise score must be in 1..9, got {score}")
    return SCALE[score]


def judgment_tfn(score: int) -> TFN:
    """Fuzzy value for a signed score: negative means the reciprocal direction."""
    if score == 0 or abs(score) > 9 or score != int(score):
        raise ValueError(f"signed score must be in -9..-1 or 1..9, got {score}")
    base = scale_tfn(abs(int(score)))
    return base.reciprocal() if score < 0 else base


def score_from_tfn(x: TFN, tol: float = 1e-6) -> int:
    """Inverse scale lookup: recover the signed score a TFN encodes.

    Raises ValueError if x is neither a scale value nor a reciprocal of one.
    """
    for score, ref in SCALE.items():
        if x.is_close(ref, tol):
            return score
        if x.is_close(ref.reciprocal(), tol):
            return -score if score != 1 else 1
    raise ValueError(f"{x} is not on the judgment scale")


def nearest_score(ratio: float) -> int:
    """Signed scale score closest to a crisp dominance ratio.

    Ratios above 1 map to the direct scale, below 1 to the reciprocal
    direction; ratios beyond the scale saturate at +/-9.
    """
    if ratio <= 0 or not math.isfinite(ratio):
        raise ValueError(f"ratio must be a positive finite number, got {ratio}")
    direct = ratio >= 1.0
    r = ratio if direct else 1.0 / ratio
    score = min(range(1, 10), key=lambda s: abs(r - s))
    return score if direct or score == 1 else -score
