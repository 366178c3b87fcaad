"""Scenario-based sensitivity analysis of the final ranking.

A scenario multiplies one top-level criterion weight by a boost factor
and rescales the remaining weights proportionally so the vector stays
normalized. Lower-level weights are held fixed; only the synthesis over
the top level is redone.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InfeasibleBoostError
from .hierarchy import GOAL_ID, DecisionResult, Hierarchy, rank_alternatives
from .weights import WeightVector

DEFAULT_BOOST_FACTOR = 1.5


@dataclass(frozen=True)
class Scenario:
    """One reweighting: `boosted_node` is None for the baseline."""

    name: str
    boosted_node: str | None
    factor: float


@dataclass(frozen=True)
class ScenarioOutcome:
    scenario: Scenario
    adjusted_weights: WeightVector
    global_scores: dict[str, float]
    ranking: tuple[str, ...]
    ties: tuple[tuple[str, ...], ...]


@dataclass(frozen=True)
class SensitivityReport:
    factor: float
    outcomes: tuple[ScenarioOutcome, ...]
    # alternative id -> sorted ranks attained across all scenarios (1-based)
    stability: dict[str, tuple[int, ...]]
    # (scenario name, (riser, faller)): riser overtakes faller vs the baseline
    flips: tuple[tuple[str, tuple[str, str]], ...]

    @property
    def baseline(self) -> ScenarioOutcome:
        return self.outcomes[0]


def scenario_weights(base: WeightVector, boosted: str, factor: float) -> WeightVector:
    """Boost one weight by `factor` and rescale the rest proportionally.

    w'_b = factor * w_b and w'_j = w_j * (1 - w'_b) / (1 - w_b) for j != b,
    which keeps the vector normalized; the result is renormalized once
    more to absorb floating-point residue.
    """
    if factor <= 0:
        raise ValueError(f"boost factor must be positive, got {factor}")
    if boosted not in base.item_ids:
        raise KeyError(f"'{boosted}' is not in the weight vector")
    wb = base[boosted]
    boosted_w = factor * wb
    if boosted_w >= 1.0:
        raise InfeasibleBoostError(boosted, wb, factor)
    scale = (1.0 - boosted_w) / (1.0 - wb)
    values = [
        boosted_w if item == boosted else v * scale
        for item, v in zip(base.item_ids, base.values)
    ]
    total = sum(values)
    return WeightVector(
        node_id=base.node_id,
        method=base.method,
        item_ids=base.item_ids,
        values=tuple(v / total for v in values),
    )


def _rescored(base: DecisionResult, goal_weights: WeightVector) -> dict[str, float]:
    scores = {a: 0.0 for a in base.global_scores}
    for criterion_id, alt_scores in base.per_criterion.items():
        w = goal_weights[criterion_id]
        for a, s in alt_scores.items():
            scores[a] += w * s
    return scores


def find_flips(
    baseline_scores: dict[str, float], scenario_scores: dict[str, float]
) -> list[tuple[str, str]]:
    """Pairs whose strict order reverses, as (riser, faller)."""
    alts = sorted(baseline_scores)
    flips = []
    for idx, a in enumerate(alts):
        for b in alts[idx + 1 :]:
            before = baseline_scores[a] - baseline_scores[b]
            after = scenario_scores[a] - scenario_scores[b]
            if before > 0 and after < 0:
                flips.append((b, a))
            elif before < 0 and after > 0:
                flips.append((a, b))
    return flips


def run_scenarios(
    h: Hierarchy,
    base: DecisionResult,
    factor: float = DEFAULT_BOOST_FACTOR,
    boosted_nodes: list[str] | None = None,
) -> SensitivityReport:
    """Baseline plus one boost scenario per top-level criterion.

    `boosted_nodes` restricts or reorders the boosted criteria; by default
    every top-level criterion is boosted once, in tree order.
    """
    goal_vector = base.local_weights[GOAL_ID]
    if boosted_nodes is None:
        boosted_nodes = list(goal_vector.item_ids)
    outcomes = [
        ScenarioOutcome(
            scenario=Scenario("baseline", None, 1.0),
            adjusted_weights=goal_vector,
            global_scores=dict(base.global_scores),
            ranking=base.ranking,
            ties=base.ties,
        )
    ]
    flips: list[tuple[str, tuple[str, str]]] = []
    for node_id in boosted_nodes:
        adjusted = scenario_weights(goal_vector, node_id, factor)
        scores = _rescored(base, adjusted)
        ranking, ties = rank_alternatives(scores)
        name = f"boost {node_id} x{factor:g}"
        outcomes.append(
            ScenarioOutcome(Scenario(name, node_id, factor), adjusted, scores, ranking, ties)
        )
        for pair in find_flips(base.global_scores, scores):
            flips.append((name, pair))
    stability: dict[str, tuple[int, ...]] = {}
    for a in base.global_scores:
        ranks = {outcome.ranking.index(a) + 1 for outcome in outcomes}
        stability[a] = tuple(sorted(ranks))
    return SensitivityReport(
        factor=factor,
        outcomes=tuple(outcomes),
        stability=stability,
        flips=tuple(flips),
    )
