"""Fuzzy pairwise-comparison matrices.

Matrices are reciprocal: the lower triangle always mirrors the upper
triangle through the fuzzy reciprocal, and the diagonal is (1,1,1).
Construction goes through the upper triangle only, so reciprocity holds
exactly rather than within rounding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DuplicatePairError, IncompleteMatrixError, ShapeError
from .tfn import TFN, ONE, DefuzzMethod, judgment_tfn, score_from_tfn

MIN_ORDER = 2
MAX_ORDER = 15  # the random-index table stops at order 15

RECIPROCITY_TOL = 1e-9


@dataclass(frozen=True)
class ExpertJudgmentSet:
    """One expert's upper-triangle judgments for one hierarchy node.

    Each pair is (i, j, score) with i < j; a negative score means item j
    dominates item i.
    """

    expert_id: str
    node_id: str
    pairs: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        seen = set()
        for i, j, _score in self.pairs:
            if i == j:
                raise ValueError(f"self-comparison ({i},{j}) is not allowed")
            if i > j:
                raise ValueError(f"pairs must be upper-triangle (i < j), got ({i},{j})")
            if (i, j) in seen:
                raise DuplicatePairError((i, j))
            seen.add((i, j))


class FuzzyComparisonMatrix:
    """Square reciprocal matrix of triangular fuzzy numbers."""

    def __init__(self, item_ids, entries):
        item_ids = tuple(item_ids)
        n = len(item_ids)
        if not (MIN_ORDER <= n <= MAX_ORDER):
            raise ShapeError(f"matrix order must be in {MIN_ORDER}..{MAX_ORDER}, got {n}")
        if len(set(item_ids)) != n:
            raise ShapeError(f"item ids must be unique: {item_ids}")
        entries = tuple(tuple(row) for row in entries)
        if len(entries) != n or any(len(row) != n for row in entries):
            raise ShapeError(f"entries must form an {n}x{n} grid")
        for i in range(n):
            if not entries[i][i].is_close(ONE):
                raise ShapeError(f"diagonal entry ({i},{i}) must be (1,1,1)")
            for j in range(i + 1, n):
                if not entries[j][i].is_close(entries[i][j].reciprocal(), RECIPROCITY_TOL):
                    raise ShapeError(
                        f"entry ({j},{i}) is not the reciprocal of ({i},{j})"
                    )
        self.item_ids = item_ids
        self.entries = entries

    @property
    def order(self) -> int:
        return len(self.item_ids)

    def __getitem__(self, ij) -> TFN:
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        return (
            isinstance(other, FuzzyComparisonMatrix)
            and self.item_ids == other.item_ids
            and all(
                a.is_close(b, 0.0)
                for ra, rb in zip(self.entries, other.entries)
                for a, b in zip(ra, rb)
            )
        )

    def __repr__(self):
        return f"FuzzyComparisonMatrix(order={self.order}, items={list(self.item_ids)})"

    @classmethod
    def from_upper_triangle(cls, item_ids, upper) -> FuzzyComparisonMatrix:
        """Build from a map of upper-triangle TFNs {(i, j): TFN} with i < j."""
        item_ids = tuple(item_ids)
        n = len(item_ids)
        expected = {(i, j) for i in range(n) for j in range(i + 1, n)}
        given = set(upper)
        if given - expected:
            bad = sorted(given - expected)[0]
            raise ShapeError(f"pair {bad} is outside the upper triangle for order {n}")
        if expected - given:
            raise IncompleteMatrixError(expected - given)
        rows = [[ONE] * n for _ in range(n)]
        for (i, j), value in upper.items():
            rows[i][j] = value
            rows[j][i] = value.reciprocal()
        return cls(item_ids, rows)

    @classmethod
    def from_scores(cls, item_ids, pairs) -> FuzzyComparisonMatrix:
        """Build from signed precise scores.

        `pairs` is an iterable of (i, j, score) with i < j; negative score
        means item j dominates item i. Every pair must appear exactly once.
        """
        upper = {}
        for i, j, score in pairs:
            if i == j:
                raise ValueError(f"self-comparison ({i},{j}) is not allowed")
            if i > j:
                raise ValueError(f"pairs must be upper-triangle (i < j), got ({i},{j})")
            if (i, j) in upper:
                raise DuplicatePairError((i, j))
            upper[(i, j)] = judgment_tfn(score)
        return cls.from_upper_triangle(item_ids, upper)

    @classmethod
    def from_judgments(cls, item_ids, judgments: ExpertJudgmentSet) -> FuzzyComparisonMatrix:
        return cls.from_scores(item_ids, judgments.pairs)

    def upper_triangle_scores(self) -> list[tuple[int, int, int]]:
        """Recover the signed scores of the upper triangle (inverse scale lookup)."""
        out = []
        for i in range(self.order):
            for j in range(i + 1, self.order):
                out.append((i, j, score_from_tfn(self.entries[i][j])))
        return out

    def permuted(self, perm) -> FuzzyComparisonMatrix:
        """Matrix with rows/columns/item ids reordered by `perm`."""
        ids = [self.item_ids[p] for p in perm]
        rows = [[self.entries[pi][pj] for pj in perm] for pi in perm]
        return FuzzyComparisonMatrix(ids, rows)


def aggregate_experts(matrices) -> FuzzyComparisonMatrix:
    """Combine per-expert matrices by componentwise geometric mean.

    Reciprocity is re-established from the aggregated upper triangle so
    the result is exactly reciprocal despite floating-point rounding.
    """
    matrices = list(matrices)
    if not matrices:
        raise ShapeError("need at least one matrix to aggregate")
    first = matrices[0]
    for m in matrices[1:]:
        if m.item_ids != first.item_ids:
            raise ShapeError(
                f"cannot aggregate matrices over different items: "
                f"{list(first.item_ids)} vs {list(m.item_ids)}"
            )
    n = first.order
    k = len(matrices)
    upper = {}
    for i in range(n):
        for j in range(i + 1, n):
            logs = [0.0, 0.0, 0.0]
            for m in matrices:
                cell = m[i, j]
                logs[0] += math.log(cell.l)
                logs[1] += math.log(cell.m)
                logs[2] += math.log(cell.u)
            upper[(i, j)] = TFN(*(math.exp(s / k) for s in logs))
    return FuzzyComparisonMatrix.from_upper_triangle(first.item_ids, upper)


@dataclass(frozen=True)
class CrispMatrix:
    """Positive reciprocal matrix of plain reals."""

    item_ids: tuple[str, ...]
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        n = len(self.item_ids)
        v = np.asarray(self.values, dtype=float)
        if v.shape != (n, n):
            raise ShapeError(f"expected a {n}x{n} matrix, got shape {v.shape}")
        if np.any(v <= 0):
            raise ShapeError("crisp matrix entries must be strictly positive")
        if not np.allclose(np.diag(v), 1.0, atol=RECIPROCITY_TOL):
            raise ShapeError("crisp matrix diagonal must be 1")
        if not np.allclose(v.T, 1.0 / v, atol=RECIPROCITY_TOL):
            raise ShapeError("crisp matrix must be reciprocal (a_ji = 1/a_ij)")
        object.__setattr__(self, "values", v)

    @property
    def order(self) -> int:
        return len(self.item_ids)


def crispify(matrix: FuzzyComparisonMatrix, method: DefuzzMethod = DefuzzMethod.MIDDLE) -> CrispMatrix:
    """Defuzzify a fuzzy matrix into a crisp reciprocal matrix.

    Only the upper triangle is defuzzified; the lower triangle is set to
    the exact reciprocals. Defuzzifying both directions independently
    would break reciprocity for asymmetric fuzzy entries.
    """
    n = matrix.order
    values = np.ones((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            x = matrix[i, j].defuzzify(method)
            values[i, j] = x
            values[j, i] = 1.0 / x
    return CrispMatrix(matrix.item_ids, values)
