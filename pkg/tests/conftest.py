"""Shared fixtures: the bundled dataset, matrix builders, random generators."""

import numpy as np
import pytest

from fahp import (
    FuzzyComparisonMatrix,
    build_model,
    evaluate,
    load_fixture,
)
from fahp.matrix import CrispMatrix
from fahp.project import JudgmentSpec, NodeSpec, ProjectFile, Settings


@pytest.fixture(scope="session")
def fixture():
    return load_fixture()


@pytest.fixture(scope="session")
def model(fixture):
    return build_model(fixture.project)


@pytest.fixture(scope="session")
def result(model):
    return evaluate(model)


def matrix_from_pairs(item_ids, pairs):
    """Build a fuzzy matrix from {(i, j): signed score}."""
    return FuzzyComparisonMatrix.from_scores(
        item_ids, [(i, j, s) for (i, j), s in sorted(pairs.items())]
    )


def consistent_crisp(weights, item_ids=None):
    """Perfectly consistent crisp matrix a_ij = w_i / w_j."""
    w = np.asarray(weights, dtype=float)
    ids = item_ids or [f"X{k}" for k in range(len(w))]
    return CrispMatrix(tuple(ids), np.outer(w, 1.0 / w))


def random_score_matrix(rng, n):
    """Random fuzzy comparison matrix of order n from random signed scores."""
    pairs = {}
    for i in range(n):
        for j in range(i + 1, n):
            score = int(rng.integers(1, 10))
            if rng.random() < 0.5:
                score = -score
            pairs[(i, j)] = score
    return matrix_from_pairs([f"X{k}" for k in range(n)], pairs)


def random_project(rng) -> ProjectFile:
    """Random valid project: small tree, score judgments, some direct leaves."""
    n_alts = int(rng.integers(2, 5))
    alternatives = tuple((f"A{k+1}", f"Alt {k+1}") for k in range(n_alts))
    alt_ids = [a for a, _ in alternatives]

    n_main = int(rng.integers(2, 5))
    criteria = []
    leaves = []
    for m in range(n_main):
        mid = f"M{m+1}"
        n_sub = int(rng.integers(0, 4))
        if n_sub == 1:
            n_sub = 2  # single-child nodes need no matrix; keep trees comparable
        children = tuple(
            NodeSpec(f"{mid}S{s+1}", f"Sub {mid}.{s+1}") for s in range(n_sub)
        )
        criteria.append(NodeSpec(mid, f"Main {m+1}", children=children))
        if children:
            leaves.extend(c.id for c in children)
        else:
            leaves.append(mid)

    def score_pairs(n):
        out = []
        for i in range(n):
            for j in range(i + 1, n):
                score = int(rng.integers(1, 10))
                if rng.random() < 0.5:
                    score = -score
                out.append([i, j, score])
        return tuple(tuple(p) for p in out)

    judgments = [JudgmentSpec(node="goal", scores=score_pairs(n_main))]
    for node in criteria:
        if node.children:
            judgments.append(JudgmentSpec(node=node.id, scores=score_pairs(len(node.children))))
    direct_weights = {}
    for leaf in leaves:
        if rng.random() < 0.5:
            judgments.append(JudgmentSpec(node=leaf, scores=score_pairs(n_alts)))
        else:
            raw = rng.random(n_alts) + 0.1
            w = raw / raw.sum()
            direct_weights[leaf] = {a: float(x) for a, x in zip(alt_ids, w)}

    return ProjectFile(
        goal=f"Random goal {int(rng.integers(0, 10_000))}",
        criteria=tuple(criteria),
        alternatives=alternatives,
        judgments=tuple(judgments),
        direct_weights=direct_weights,
        settings=Settings(),
        metadata={"seeded": True},
    )
