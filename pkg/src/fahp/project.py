"""Project-file persistence, CSV export, and report rendering.

A project is a UTF-8 JSON document:

    {
      "schema_version": 1,
      "goal": "...",
      "criteria": [{"id", "label", "sdg": [...], "children": [...]}, ...],
      "alternatives": [{"id", "label"}, ...],
      "judgments": [{"node": "...", "scores": [[i, j, signed score], ...]}
                    or {"node": "...", "tfns": [[[l,m,u], ...], ...]}, ...],
      "direct_weights": {"<leaf id>": {"<alt id>": w, ...}, ...},
      "settings": {"defuzz", "method", "cr_threshold", "sensitivity_factor"},
      "metadata": {...}
    }

Precise scores are signed integers (negative = reciprocal direction);
explicit fuzzy grids use [l, m, u] arrays. Direct weight vectors may be
rounded (as published tables usually are): they are accepted when they
sum to 1 within 0.01 and renormalized exactly while building the model,
but the file round-trips the verbatim values.
"""

from __future__ import annotations

import io
import json
from dataclasses import dataclass, field

from .consistency import DEFAULT_CR_THRESHOLD, ConsistencyReport
from .errors import (
    FahpError,
    ProjectParseError,
    ProjectValidationError,
    ProjectVersionError,
)
from .hierarchy import (
    GOAL_ID,
    Alternative,
    CriterionNode,
    DecisionResult,
    Hierarchy,
)
from .matrix import FuzzyComparisonMatrix
from .sensitivity import DEFAULT_BOOST_FACTOR, SensitivityReport
from .tfn import TFN, DefuzzMethod
from .weights import DerivationMethod

SCHEMA_VERSION = 1

DIRECT_WEIGHT_SUM_TOL = 0.01


@dataclass(frozen=True)
class Settings:
    defuzz: DefuzzMethod = DefuzzMethod.MIDDLE
    method: DerivationMethod = DerivationMethod.GM_MIDDLE
    cr_threshold: float = DEFAULT_CR_THRESHOLD
    sensitivity_factor: float = DEFAULT_BOOST_FACTOR

    def as_dict(self) -> dict:
        return {
            "defuzz": self.defuzz.value,
            "method": self.method.value,
            "cr_threshold": self.cr_threshold,
            "sensitivity_factor": self.sensitivity_factor,
        }


@dataclass(frozen=True)
class NodeSpec:
    id: str
    label: str
    sdg: tuple[str, ...] = ()
    children: tuple["NodeSpec", ...] = ()


@dataclass(frozen=True)
class JudgmentSpec:
    """Per-node judgment: either signed scores or an explicit fuzzy grid."""

    node: str
    scores: tuple[tuple[int, int, int], ...] | None = None
    tfns: tuple[tuple[tuple[float, float, float], ...], ...] | None = None


@dataclass(frozen=True)
class ProjectFile:
    goal: str
    criteria: tuple[NodeSpec, ...]
    alternatives: tuple[tuple[str, str], ...]  # (id, label)
    judgments: tuple[JudgmentSpec, ...]
    direct_weights: dict[str, dict[str, float]] = field(default_factory=dict)
    settings: Settings = Settings()
    metadata: dict = field(default_factory=dict)
    schema_version: int = SCHEMA_VERSION


# ---------------------------------------------------------------------------
# parsing


def _require(obj: dict, key: str, kind, where: str):
    if key not in obj:
        raise ProjectValidationError(f"missing required key '{key}'", where)
    value = obj[key]
    if kind is float:
        if not isinstance(value, (int, float)) or isinstance(value, bool):
            raise ProjectValidationError(f"'{key}' must be a number", where)
        return float(value)
    if not isinstance(value, kind):
        raise ProjectValidationError(f"'{key}' must be {kind.__name__}", where)
    return value


def _parse_node(obj, where: str) -> NodeSpec:
    if not isinstance(obj, dict):
        raise ProjectValidationError("criterion node must be an object", where)
    node_id = _require(obj, "id", str, where)
    label = _require(obj, "label", str, where)
    sdg = obj.get("sdg", [])
    if not isinstance(sdg, list) or not all(isinstance(s, str) for s in sdg):
        raise ProjectValidationError("'sdg' must be a list of strings", f"{where}.sdg")
    children = obj.get("children", [])
    if not isinstance(children, list):
        raise ProjectValidationError("'children' must be a list", f"{where}.children")
    parsed_children = tuple(
        _parse_node(c, f"{where}.children[{k}]") for k, c in enumerate(children)
    )
    return NodeSpec(node_id, label, tuple(sdg), parsed_children)


def _parse_judgment(obj, where: str) -> JudgmentSpec:
    if not isinstance(obj, dict):
        raise ProjectValidationError("judgment must be an object", where)
    node = _require(obj, "node", str, where)
    has_scores = "scores" in obj
    has_tfns = "tfns" in obj
    if has_scores == has_tfns:
        raise ProjectValidationError(
            "judgment needs exactly one of 'scores' or 'tfns'", where
        )
    if has_scores:
        raw = obj["scores"]
        if not isinstance(raw, list):
            raise ProjectValidationError("'scores' must be a list", f"{where}.scores")
        scores = []
        for k, entry in enumerate(raw):
            if (
                not isinstance(entry, list)
                or len(entry) != 3
                or not all(isinstance(x, int) and not isinstance(x, bool) for x in entry)
            ):
                raise ProjectValidationError(
                    "each score entry must be [i, j, signed score]",
                    f"{where}.scores[{k}]",
                )
            scores.append((entry[0], entry[1], entry[2]))
        return JudgmentSpec(node=node, scores=tuple(scores))
    raw = obj["tfns"]
    if not isinstance(raw, list):
        raise ProjectValidationError("'tfns' must be a list of rows", f"{where}.tfns")
    rows = []
    for r, row in enumerate(raw):
        if not isinstance(row, list):
            raise ProjectValidationError("each tfn row must be a list", f"{where}.tfns[{r}]")
        cells = []
        for c, cell in enumerate(row):
            if (
                not isinstance(cell, list)
                or len(cell) != 3
                or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in cell)
            ):
                raise ProjectValidationError(
                    "each tfn cell must be [l, m, u]", f"{where}.tfns[{r}][{c}]"
                )
            cells.append((float(cell[0]), float(cell[1]), float(cell[2])))
        rows.append(tuple(cells))
    return JudgmentSpec(node=node, tfns=tuple(rows))


def _walk_ids(nodes) -> list[str]:
    out = []
    for node in nodes:
        out.append(node.id)
        out.extend(_walk_ids(node.children))
    return out


def _validate_project(p: ProjectFile) -> None:
    ids = _walk_ids(p.criteria)
    alt_ids = [a for a, _ in p.alternatives]
    all_ids = ids + alt_ids
    dupes = {i for i in all_ids if all_ids.count(i) > 1}
    if dupes:
        raise ProjectValidationError(f"duplicate node ids: {sorted(dupes)}", "criteria")
    if GOAL_ID in all_ids:
        raise ProjectValidationError(f"'{GOAL_ID}' is a reserved id", "criteria")
    if not p.criteria:
        raise ProjectValidationError("project has no criteria", "criteria")
    if len(p.alternatives) < 2:
        raise ProjectValidationError("project needs at least 2 alternatives", "alternatives")

    known = set(ids) | {GOAL_ID}
    seen_judged = set()
    for k, j in enumerate(p.judgments):
        if j.node not in known:
            raise ProjectValidationError(
                f"judgment references unknown node '{j.node}'", f"judgments[{k}].node"
            )
        if j.node in seen_judged:
            raise ProjectValidationError(
                f"node '{j.node}' has more than one judgment", f"judgments[{k}].node"
            )
        seen_judged.add(j.node)
    for leaf_id, vector in p.direct_weights.items():
        if leaf_id not in ids:
            raise ProjectValidationError(
                f"direct weights reference unknown node '{leaf_id}'",
                f"direct_weights.{leaf_id}",
            )
        if leaf_id in seen_judged:
            raise ProjectValidationError(
                f"leaf '{leaf_id}' has both a judgment matrix and direct weights",
                f"direct_weights.{leaf_id}",
            )
        unknown = set(vector) - set(alt_ids)
        if unknown:
            raise ProjectValidationError(
                f"direct weights of '{leaf_id}' reference unknown alternatives {sorted(unknown)}",
                f"direct_weights.{leaf_id}",
            )
        total = sum(vector.values())
        if abs(total - 1.0) > DIRECT_WEIGHT_SUM_TOL:
            raise ProjectValidationError(
                f"direct weights of '{leaf_id}' sum to {total:.4f}, expected ~1",
                f"direct_weights.{leaf_id}",
            )
        if any(w <= 0 for w in vector.values()):
            raise ProjectValidationError(
                f"direct weights of '{leaf_id}' must be strictly positive",
                f"direct_weights.{leaf_id}",
            )


def _parse_settings(obj, where: str) -> Settings:
    if not isinstance(obj, dict):
        raise ProjectValidationError("'settings' must be an object", where)
    defaults = Settings()
    try:
        defuzz = DefuzzMethod(obj.get("defuzz", defaults.defuzz.value))
        method = DerivationMethod(obj.get("method", defaults.method.value))
    except ValueError as exc:
        raise ProjectValidationError(str(exc), where) from None
    threshold = obj.get("cr_threshold", defaults.cr_threshold)
    factor = obj.get("sensitivity_factor", defaults.sensitivity_factor)
    for name, value in (("cr_threshold", threshold), ("sensitivity_factor", factor)):
        if not isinstance(value, (int, float)) or isinstance(value, bool) or value <= 0:
            raise ProjectValidationError(f"'{name}' must be a positive number", where)
    return Settings(defuzz, method, float(threshold), float(factor))


def load_project(source) -> ProjectFile:
    """Parse and validate a project from a path, file object, bytes or str."""
    if hasattr(source, "read"):
        text = source.read()
        if isinstance(text, bytes):
            text = text.decode("utf-8")
    else:
        if isinstance(source, bytes):
            source = source.decode("utf-8")
        if isinstance(source, str) and not _looks_like_path(source):
            text = source
        else:
            with open(source, "r", encoding="utf-8") as fh:
                text = fh.read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ProjectParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(doc, dict):
        raise ProjectParseError("project document must be a JSON object")

    version = doc.get("schema_version")
    if version != SCHEMA_VERSION:
        raise ProjectVersionError(
            f"unsupported schema_version {version!r}; this build reads version {SCHEMA_VERSION}"
        )
    goal = _require(doc, "goal", str, "$")
    raw_criteria = _require(doc, "criteria", list, "$")
    criteria = tuple(
        _parse_node(c, f"criteria[{k}]") for k, c in enumerate(raw_criteria)
    )
    raw_alts = _require(doc, "alternatives", list, "$")
    alternatives = []
    for k, a in enumerate(raw_alts):
        if not isinstance(a, dict):
            raise ProjectValidationError("alternative must be an object", f"alternatives[{k}]")
        alternatives.append(
            (_require(a, "id", str, f"alternatives[{k}]"), _require(a, "label", str, f"alternatives[{k}]"))
        )
    raw_judgments = doc.get("judgments", [])
    if not isinstance(raw_judgments, list):
        raise ProjectValidationError("'judgments' must be a list", "judgments")
    judgments = tuple(
        _parse_judgment(j, f"judgments[{k}]") for k, j in enumerate(raw_judgments)
    )
    raw_direct = doc.get("direct_weights", {})
    if not isinstance(raw_direct, dict):
        raise ProjectValidationError("'direct_weights' must be an object", "direct_weights")
    direct = {}
    for leaf_id, vector in raw_direct.items():
        if not isinstance(vector, dict):
            raise ProjectValidationError(
                "direct weight vector must be an object", f"direct_weights.{leaf_id}"
            )
        direct[leaf_id] = {
            alt: _require(vector, alt, float, f"direct_weights.{leaf_id}")
            for alt in vector
        }
    settings = _parse_settings(doc.get("settings", {}), "settings")
    metadata = doc.get("metadata", {})
    if not isinstance(metadata, dict):
        raise ProjectValidationError("'metadata' must be an object", "metadata")

    project = ProjectFile(
        goal=goal,
        criteria=criteria,
        alternatives=tuple(alternatives),
        judgments=judgments,
        direct_weights=direct,
        settings=settings,
        metadata=metadata,
        schema_version=version,
    )
    _validate_project(project)
    # building the model exercises matrix shape/reciprocity validation too
    build_model(project)
    return project


def _looks_like_path(source: str) -> bool:
    stripped = source.lstrip()
    return not (stripped.startswith("{") or stripped.startswith("["))


def save_project(p: ProjectFile) -> bytes:
    """Serialize a validated project; load(save(p)) is semantically lossless."""
    _validate_project(p)

    def node_dict(n: NodeSpec) -> dict:
        out = {"id": n.id, "label": n.label}
        if n.sdg:
            out["sdg"] = list(n.sdg)
        if n.children:
            out["children"] = [node_dict(c) for c in n.children]
        return out

    def judgment_dict(j: JudgmentSpec) -> dict:
        if j.scores is not None:
            return {"node": j.node, "scores": [list(s) for s in j.scores]}
        return {"node": j.node, "tfns": [[list(c) for c in row] for row in j.tfns]}

    doc = {
        "schema_version": p.schema_version,
        "goal": p.goal,
        "criteria": [node_dict(c) for c in p.criteria],
        "alternatives": [{"id": a, "label": label} for a, label in p.alternatives],
        "judgments": [judgment_dict(j) for j in p.judgments],
        "direct_weights": p.direct_weights,
        "settings": p.settings.as_dict(),
        "metadata": p.metadata,
    }
    return (json.dumps(doc, indent=2, ensure_ascii=False) + "\n").encode("utf-8")


# ---------------------------------------------------------------------------
# model building


def _spec_to_node(spec: NodeSpec) -> CriterionNode:
    return CriterionNode(
        id=spec.id,
        label=spec.label,
        sdg=spec.sdg,
        children=tuple(_spec_to_node(c) for c in spec.children),
    )


def build_model(p: ProjectFile) -> Hierarchy:
    """Construct the evaluable hierarchy from a parsed project.

    Judgment matrices are built from their score or fuzzy-grid form;
    direct leaf weight vectors are renormalized to sum exactly to 1 so
    synthesis conserves probability mass.
    """
    h = Hierarchy(
        goal=p.goal,
        criteria=tuple(_spec_to_node(c) for c in p.criteria),
        alternatives=tuple(Alternative(a, label) for a, label in p.alternatives),
    )
    for j in p.judgments:
        item_ids = h.children_ids(j.node)
        try:
            if j.scores is not None:
                matrix = FuzzyComparisonMatrix.from_scores(item_ids, j.scores)
            else:
                rows = [[TFN(*cell) for cell in row] for row in j.tfns]
                matrix = FuzzyComparisonMatrix(item_ids, rows)
        except (FahpError, ValueError) as exc:
            raise ProjectValidationError(str(exc), f"judgments for node '{j.node}'") from None
        h.judgments[j.node] = matrix
    for leaf_id, vector in p.direct_weights.items():
        total = sum(vector.values())
        h.direct_weights[leaf_id] = {a: w / total for a, w in vector.items()}
    return h


# ---------------------------------------------------------------------------
# exports


def _fmt(x: float) -> str:
    return f"{x:.6f}"


def export_csv(result: DecisionResult | SensitivityReport) -> bytes:
    """CSV export; layout depends on the result type.

    DecisionResult: one row per alternative with per-top-criterion scores
    and the global score. SensitivityReport: one row per (scenario,
    alternative) with score and rank.
    """
    buf = io.StringIO()
    if isinstance(result, DecisionResult):
        criteria = list(result.per_criterion)
        buf.write("alternative," + ",".join(criteria) + ",global\n")
        for a in result.ranking:
            cells = [_fmt(result.per_criterion[c][a]) for c in criteria]
            buf.write(f"{a}," + ",".join(cells) + f",{_fmt(result.global_scores[a])}\n")
    elif isinstance(result, SensitivityReport):
        buf.write("scenario,alternative,score,rank\n")
        for outcome in result.outcomes:
            for rank, a in enumerate(outcome.ranking, start=1):
                buf.write(
                    f"{outcome.scenario.name},{a},{_fmt(outcome.global_scores[a])},{rank}\n"
                )
    else:
        raise TypeError(f"cannot export {type(result).__name__} as CSV")
    return buf.getvalue().encode("utf-8")


def render_report(
    h: Hierarchy,
    result: DecisionResult,
    sensitivity: SensitivityReport | None = None,
    consistency: dict[str, ConsistencyReport] | None = None,
    suggestions: dict[str, list[tuple[int, int, int]]] | None = None,
) -> str:
    """Deterministic CommonMark report over computed results."""
    labels = {a.id: a.label for a in h.alternatives}
    for node in h.iter_nodes():
        labels[node.id] = node.label
    lines: list[str] = []
    push = lines.append

    push(f"# Decision report: {h.goal}")
    push("")
    push("## Criterion weights")
    push("")
    for node_id in [GOAL_ID] + [n.id for n in h.iter_nodes() if not n.is_leaf]:
        vector = result.local_weights.get(node_id)
        if vector is None:
            continue
        title = "Top-level criteria" if node_id == GOAL_ID else f"{labels[node_id]} ({node_id})"
        push(f"### {title}")
        push("")
        push("| item | weight |")
        push("| --- | --- |")
        for item, w in zip(vector.item_ids, vector.values):
            push(f"| {labels.get(item, item)} ({item}) | {w:.4f} |")
        push("")

    push("## Alternative scores by top-level criterion")
    push("")
    criteria = list(result.per_criterion)
    push("| alternative | " + " | ".join(criteria) + " | global |")
    push("| --- |" + " --- |" * (len(criteria) + 1))
    for a in result.ranking:
        row = " | ".join(f"{result.per_criterion[c][a]:.4f}" for c in criteria)
        push(f"| {labels[a]} ({a}) | {row} | {result.global_scores[a]:.4f} |")
    push("")

    push("## Final ranking")
    push("")
    ordered_labels = ", ".join(labels[a] for a in result.ranking)
    push(f"Final order: {ordered_labels}.")
    push("")
    for rank, a in enumerate(result.ranking, start=1):
        push(f"{rank}. {labels[a]} ({a}) with score {result.global_scores[a]:.4f}")
    push("")
    if result.ties:
        for group in result.ties:
            push(f"Tied within 1e-9: {', '.join(group)}.")
        push("")

    if sensitivity is not None:
        push("## Sensitivity scenarios")
        push("")
        push(f"Boost factor: {sensitivity.factor:g}.")
        push("")
        push("| scenario | ranking |")
        push("| --- | --- |")
        for outcome in sensitivity.outcomes:
            order = " > ".join(outcome.ranking)
            push(f"| {outcome.scenario.name} | {order} |")
        push("")
        if sensitivity.flips:
            push("Rank flips vs baseline:")
            push("")
            for name, (winner, loser) in sensitivity.flips:
                push(f"- {name}: {labels[winner]} overtakes {labels[loser]}")
        else:
            push("No rank flips versus the baseline.")
        push("")

    if consistency:
        push("## Consistency annex")
        push("")
        push("| node | lambda_max | CI | RI | CR | acceptable |")
        push("| --- | --- | --- | --- | --- | --- |")
        for node_id in sorted(consistency):
            r = consistency[node_id]
            ok = "yes" if r.acceptable else "NO"
            push(
                f"| {node_id} | {r.lambda_max:.4f} | {r.ci:.4f} | {r.ri:.2f} "
                f"| {r.cr:.4f} | {ok} |"
            )
        push("")
        failing = [n for n in sorted(consistency) if not consistency[n].acceptable]
        for node_id in failing:
            push(f"Node {node_id} exceeds the CR threshold; suggested revisions:")
            push("")
            for i, j, score in (suggestions or {}).get(node_id, []):
                push(f"- revise pair ({i},{j}) toward score {score:+d}")
            push("")
    return "\n".join(lines)
