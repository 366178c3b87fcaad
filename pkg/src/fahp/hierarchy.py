"""Decision hierarchy and synthesis of local weights into a ranking.

The tree runs goal -> criteria -> (optional sub-criteria ...) -> alternatives.
Judgments attach per node id: internal nodes carry a fuzzy matrix over
their children, leaves carry either a fuzzy matrix over the alternatives
or a ready-made alternative weight vector. The goal's matrix over the
top-level criteria is keyed by the reserved id "goal".
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .consistency import DEFAULT_CR_THRESHOLD, consistency_ratio
from .errors import ConsistencyError, ShapeError
from .matrix import FuzzyComparisonMatrix, crispify
from .tfn import DefuzzMethod
from .weights import DerivationMethod, WeightVector, derive_weights

GOAL_ID = "goal"

SCORE_TIE_TOL = 1e-9


@dataclass(frozen=True)
class Alternative:
    id: str
    label: str


@dataclass(frozen=True)
class CriterionNode:
    id: str
    label: str
    sdg: tuple[str, ...] = ()
    children: tuple["CriterionNode", ...] = ()

    @property
    def is_leaf(self) -> bool:
        return not self.children


@dataclass
class Hierarchy:
    """Goal, criteria tree, alternatives, and attached judgments."""

    goal: str
    criteria: tuple[CriterionNode, ...]
    alternatives: tuple[Alternative, ...]
    judgments: dict[str, FuzzyComparisonMatrix] = field(default_factory=dict)
    direct_weights: dict[str, dict[str, float]] = field(default_factory=dict)

    def iter_nodes(self):
        """All criterion nodes, depth-first in tree order."""
        stack = list(reversed(self.criteria))
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))

    def leaves(self) -> list[CriterionNode]:
        return [n for n in self.iter_nodes() if n.is_leaf]

    def find(self, node_id: str) -> CriterionNode | None:
        for node in self.iter_nodes():
            if node.id == node_id:
                return node
        return None

    def children_ids(self, node_id: str) -> list[str]:
        """Ids a judgment matrix for `node_id` compares (children or alternatives)."""
        if node_id == GOAL_ID:
            return [c.id for c in self.criteria]
        node = self.find(node_id)
        if node is None:
            raise KeyError(f"unknown node '{node_id}'")
        if node.is_leaf:
            return [a.id for a in self.alternatives]
        return [c.id for c in node.children]

    def alternative_ids(self) -> list[str]:
        return [a.id for a in self.alternatives]


@dataclass(frozen=True)
class Violation:
    code: str
    node_id: str
    message: str


def validate_hierarchy(h: Hierarchy) -> list[Violation]:
    """All structural violations; an empty list means the model is usable."""
    violations = []
    seen: set[str] = set()
    for node in h.iter_nodes():
        if node.id in seen:
            violations.append(
                Violation("duplicate-id", node.id, f"node id '{node.id}' appears more than once")
            )
        seen.add(node.id)
    for alt in h.alternatives:
        if alt.id in seen:
            violations.append(
                Violation("duplicate-id", alt.id, f"alternative id '{alt.id}' collides with another id")
            )
        seen.add(alt.id)
    if GOAL_ID in {n.id for n in h.iter_nodes()} | {a.id for a in h.alternatives}:
        violations.append(
            Violation("reserved-id", GOAL_ID, f"'{GOAL_ID}' is reserved for the root")
        )

    if not h.criteria:
        violations.append(Violation("empty-level", GOAL_ID, "hierarchy has no criteria"))
    if len(h.alternatives) < 2:
        violations.append(
            Violation("empty-level", GOAL_ID, "hierarchy needs at least 2 alternatives")
        )

    alt_ids = set(h.alternative_ids())
    for node in h.iter_nodes():
        if not node.is_leaf:
            continue
        has_matrix = node.id in h.judgments
        has_direct = node.id in h.direct_weights
        if not has_matrix and not has_direct:
            violations.append(
                Violation(
                    "missing-judgment",
                    node.id,
                    f"leaf '{node.id}' has neither a comparison matrix nor direct weights",
                )
            )
        elif has_matrix and has_direct:
            violations.append(
                Violation(
                    "ambiguous-judgment",
                    node.id,
                    f"leaf '{node.id}' has both a comparison matrix and direct weights",
                )
            )
        if has_direct and set(h.direct_weights[node.id]) != alt_ids:
            violations.append(
                Violation(
                    "bad-direct-weights",
                    node.id,
                    f"direct weights of '{node.id}' do not cover exactly the alternatives",
                )
            )

    internal = [(GOAL_ID, [c.id for c in h.criteria])]
    internal += [(n.id, [c.id for c in n.children]) for n in h.iter_nodes() if not n.is_leaf]
    for node_id, child_ids in internal:
        if len(child_ids) >= 2 and node_id not in h.judgments:
            violations.append(
                Violation(
                    "missing-judgment",
                    node_id,
                    f"node '{node_id}' compares {len(child_ids)} children but has no matrix",
                )
            )

    for node_id, matrix in h.judgments.items():
        try:
            expected = h.children_ids(node_id)
        except KeyError:
            violations.append(
                Violation("unknown-node", node_id, f"judgments reference unknown node '{node_id}'")
            )
            continue
        if list(matrix.item_ids) != expected:
            violations.append(
                Violation(
                    "item-mismatch",
                    node_id,
                    f"matrix items {list(matrix.item_ids)} do not match {expected}",
                )
            )
    for node_id in h.direct_weights:
        node = h.find(node_id)
        if node is None:
            violations.append(
                Violation("unknown-node", node_id, f"direct weights reference unknown node '{node_id}'")
            )
        elif not node.is_leaf:
            violations.append(
                Violation("bad-direct-weights", node_id, f"'{node_id}' is not a leaf criterion")
            )
    return violations


def compute_local_weights(
    h: Hierarchy,
    method: DerivationMethod = DerivationMethod.GM_MIDDLE,
    threshold: float = DEFAULT_CR_THRESHOLD,
    override: bool = False,
    defuzz: DefuzzMethod = DefuzzMethod.MIDDLE,
) -> dict[str, WeightVector]:
    """One weight vector per node: internal nodes over children, leaves over alternatives.

    Every matrix must pass the consistency gate unless `override` is set;
    nodes with a single child get weight 1 without a matrix, and leaves
    with direct weight vectors pass them through unchanged.
    """
    local: dict[str, WeightVector] = {}
    node_ids = [GOAL_ID] + [n.id for n in h.iter_nodes()]
    for node_id in node_ids:
        child_ids = h.children_ids(node_id)
        node = None if node_id == GOAL_ID else h.find(node_id)
        if node is not None and node.is_leaf and node_id in h.direct_weights:
            dw = h.direct_weights[node_id]
            local[node_id] = WeightVector(
                node_id=node_id,
                method="direct",
                item_ids=tuple(child_ids),
                values=tuple(dw[c] for c in child_ids),
            )
            continue
        if node_id != GOAL_ID and node is not None and not node.is_leaf and len(child_ids) == 1:
            local[node_id] = WeightVector(node_id, "trivial", tuple(child_ids), (1.0,))
            continue
        if node_id == GOAL_ID and len(child_ids) == 1:
            local[node_id] = WeightVector(node_id, "trivial", tuple(child_ids), (1.0,))
            continue
        matrix = h.judgments.get(node_id)
        if matrix is None:
            raise ShapeError(f"node '{node_id}' has no judgment matrix")
        vector = derive_weights(matrix, method, node_id)
        report = consistency_ratio(crispify(matrix, defuzz), vector.as_array(), threshold)
        if not report.acceptable and not override:
            raise ConsistencyError(node_id, report)
        local[node_id] = vector
    return local


@dataclass(frozen=True)
class DecisionResult:
    """Synthesis output: local weights, per-criterion and global scores, ranking."""

    local_weights: dict[str, WeightVector]
    global_leaf_weights: dict[str, float]
    per_criterion: dict[str, dict[str, float]]
    global_scores: dict[str, float]
    ranking: tuple[str, ...]
    ties: tuple[tuple[str, ...], ...]


def _subtree_scores(
    h: Hierarchy, node: CriterionNode, local: dict[str, WeightVector]
) -> tuple[dict[str, float], dict[str, float]]:
    """Alternative scores within a node's subtree and its leaf path weights.

    Path weights are relative to the subtree root (they multiply up the
    recursion), so each level's scores are a convex combination of the
    alternatives' local weights.
    """
    if node.is_leaf:
        return dict(local[node.id].as_dict()), {node.id: 1.0}
    scores = {a: 0.0 for a in h.alternative_ids()}
    leaf_weights: dict[str, float] = {}
    vector = local[node.id]
    for child in node.children:
        child_scores, child_leaves = _subtree_scores(h, child, local)
        w = vector[child.id]
        for a, s in child_scores.items():
            scores[a] += w * s
        for leaf_id, lw in child_leaves.items():
            leaf_weights[leaf_id] = w * lw
    return scores, leaf_weights


def score_alternatives(h: Hierarchy, local: dict[str, WeightVector]) -> DecisionResult:
    """Fold local weights into global alternative scores and a ranking.

    The global weight of a leaf is the product of local weights along its
    path from the goal; an alternative's score is the sum over leaves of
    global leaf weight times its local weight under that leaf.
    """
    goal_vector = local[GOAL_ID]
    per_criterion: dict[str, dict[str, float]] = {}
    global_scores = {a: 0.0 for a in h.alternative_ids()}
    global_leaf_weights: dict[str, float] = {}
    for criterion in h.criteria:
        scores, leaf_weights = _subtree_scores(h, criterion, local)
        per_criterion[criterion.id] = scores
        top_w = goal_vector[criterion.id]
        for a, s in scores.items():
            global_scores[a] += top_w * s
        for leaf_id, lw in leaf_weights.items():
            global_leaf_weights[leaf_id] = top_w * lw
    ranking, ties = rank_alternatives(global_scores)
    return DecisionResult(
        local_weights=local,
        global_leaf_weights=global_leaf_weights,
        per_criterion=per_criterion,
        global_scores=global_scores,
        ranking=ranking,
        ties=ties,
    )


def rank_alternatives(scores: dict[str, float]) -> tuple[tuple[str, ...], tuple[tuple[str, ...], ...]]:
    """Descending ranking with tie groups.

    Scores within 1e-9 of each other tie; tied items are ordered by id
    ascending and reported as groups.
    """
    ordered = sorted(scores, key=lambda a: (-scores[a], a))
    groups: list[list[str]] = []
    for a in ordered:
        if groups and abs(scores[groups[-1][-1]] - scores[a]) < SCORE_TIE_TOL:
            groups[-1].append(a)
        else:
            groups.append([a])
    ranking = tuple(a for g in groups for a in sorted(g))
    ties = tuple(tuple(sorted(g)) for g in groups if len(g) > 1)
    return ranking, ties


def evaluate(
    h: Hierarchy,
    method: DerivationMethod = DerivationMethod.GM_MIDDLE,
    threshold: float = DEFAULT_CR_THRESHOLD,
    override: bool = False,
    defuzz: DefuzzMethod = DefuzzMethod.MIDDLE,
) -> DecisionResult:
    """Convenience pipeline: local weights then synthesis."""
    local = compute_local_weights(h, method, threshold, override, defuzz)
    return score_alternatives(h, local)
