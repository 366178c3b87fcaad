"""Local HTTP service backing the web UI.

Single project, single user, loopback by default. Judgment edits are
serialized under a lock and invalidate the cached decision result, so a
read after an edit always reflects the edit. Nothing persists across
restarts except through an explicit POST /save.
"""

from __future__ import annotations

import threading
from dataclasses import replace

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from .consistency import consistency_ratio, locate_inconsistency
from .errors import InfeasibleBoostError
from .hierarchy import compute_local_weights, score_alternatives
from .matrix import crispify
from .project import JudgmentSpec, ProjectFile, build_model, save_project
from .sensitivity import run_scenarios
from .tfn import LINGUISTIC_TERMS, SCALE
from .weights import WeightVector, derive_weights

MAX_SUGGESTIONS = 3


class _Session:
    """Mutable service state: the project plus a result cache."""

    def __init__(self, project: ProjectFile, project_path: str | None):
        self.lock = threading.RLock()
        self.project = project
        self.project_path = project_path
        self.dirty = False
        self._cached = None  # (local_weights, result, failing_nodes)

    def invalidate(self) -> None:
        self._cached = None

    def model(self):
        return build_model(self.project)

    def evaluate(self):
        """Local weights, decision result, and CR-failing node ids (cached)."""
        if self._cached is None:
            settings = self.project.settings
            model = self.model()
            local = compute_local_weights(
                model, settings.method, settings.cr_threshold,
                override=True, defuzz=settings.defuzz,
            )
            failing = []
            for node_id, matrix in model.judgments.items():
                report = consistency_ratio(
                    crispify(matrix, settings.defuzz),
                    local[node_id].as_array(),
                    settings.cr_threshold,
                )
                if not report.acceptable:
                    failing.append(node_id)
            result = score_alternatives(model, local)
            self._cached = (local, result, sorted(failing))
        return self._cached


def _node_payload(node) -> dict:
    return {
        "id": node.id,
        "label": node.label,
        "sdg": list(node.sdg),
        "children": [_node_payload(c) for c in node.children],
    }


def _vector_payload(vec: WeightVector) -> dict:
    return {
        "node": vec.node_id,
        "method": vec.method,
        "items": list(vec.item_ids),
        "weights": {item: w for item, w in zip(vec.item_ids, vec.values)},
    }


def _report_payload(report, suggestions) -> dict:
    payload = report.as_dict()
    payload["worst_entries"] = [
        {"i": i, "j": j, "magnitude": mag} for i, j, mag in report.worst_entries
    ]
    payload["suggestions"] = [
        {"i": i, "j": j, "score": score} for i, j, score in suggestions
    ]
    return payload


def create_app(project: ProjectFile, project_path: str | None = None) -> FastAPI:
    app = FastAPI(title="fahp service", version="0.1.0")
    # the browser UI is served from a different origin (static files); the
    # service itself is loopback-only, so permissive CORS is fine here
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    session = _Session(project, project_path)

    def error(status: int, detail) -> JSONResponse:
        return JSONResponse(status_code=status, content={"detail": detail})

    @app.get("/model")
    def get_model():
        with session.lock:
            p = session.project
            model = session.model()
            return {
                "goal": p.goal,
                "criteria": [_node_payload(n) for n in model.criteria],
                "alternatives": [
                    {"id": a.id, "label": a.label} for a in model.alternatives
                ],
                "scale": [
                    {
                        "score": s,
                        "term": LINGUISTIC_TERMS[s],
                        "tfn": list(SCALE[s].as_tuple()),
                        "reciprocal": list(SCALE[s].reciprocal().as_tuple()),
                    }
                    for s in sorted(SCALE)
                ],
                "settings": p.settings.as_dict(),
                "judged_nodes": sorted(model.judgments),
                "direct_weight_nodes": sorted(model.direct_weights),
                "dirty": session.dirty,
            }

    @app.put("/judgments/{node_id}")
    async def put_judgments(node_id: str, request: Request):
        try:
            body = await request.json()
        except Exception:
            return error(400, "request body must be JSON")
        if not isinstance(body, dict) or "pairs" not in body:
            return error(400, "body must be an object with a 'pairs' list")
        raw_pairs = body["pairs"]
        if not isinstance(raw_pairs, list):
            return error(400, "'pairs' must be a list of [i, j, score]")
        pairs = []
        for entry in raw_pairs:
            if (
                not isinstance(entry, list)
                or len(entry) != 3
                or not all(isinstance(x, int) and not isinstance(x, bool) for x in entry)
            ):
                return error(400, f"malformed pair entry: {entry!r}")
            pairs.append((entry[0], entry[1], entry[2]))

        with session.lock:
            model = session.model()
            try:
                item_ids = model.children_ids(node_id)
            except KeyError:
                return error(404, f"unknown node '{node_id}'")
            n = len(item_ids)
            if n < 2:
                return error(400, f"node '{node_id}' has nothing to compare")
            expected = {(i, j) for i in range(n) for j in range(i + 1, n)}
            given = {(i, j) for i, j, _ in pairs}
            if len(given) != len(pairs):
                return error(400, "duplicate pairs in judgment set")
            if given - expected:
                bad = sorted(given - expected)[0]
                return error(400, f"pair {list(bad)} is outside the upper triangle")
            missing = sorted(expected - given)
            if missing:
                return error(
                    409,
                    {
                        "message": f"judgment set for '{node_id}' is incomplete",
                        "missing_pairs": [list(p) for p in missing],
                    },
                )
            for i, j, score in pairs:
                if score == 0 or abs(score) > 9:
                    return error(400, f"score for pair ({i},{j}) must be in -9..-1 or 1..9")

            spec = JudgmentSpec(node=node_id, scores=tuple(sorted(pairs)))
            other = tuple(j for j in session.project.judgments if j.node != node_id)
            direct = {
                leaf: dict(v)
                for leaf, v in session.project.direct_weights.items()
                if leaf != node_id
            }
            session.project = replace(
                session.project, judgments=other + (spec,), direct_weights=direct
            )
            session.dirty = True
            session.invalidate()

            settings = session.project.settings
            model = session.model()
            matrix = model.judgments[node_id]
            crisp = crispify(matrix, settings.defuzz)
            vec = derive_weights(matrix, settings.method, node_id)
            report = consistency_ratio(crisp, vec.as_array(), settings.cr_threshold)
            suggestions = (
                locate_inconsistency(crisp, vec.as_array(), MAX_SUGGESTIONS)
                if report.worst_entries
                else []
            )
            payload = _report_payload(report, suggestions)
            payload["node"] = node_id
            payload["weights"] = _vector_payload(vec)["weights"]
            return payload

    @app.get("/weights")
    def get_weights(override: bool = False):
        with session.lock:
            local, _result, failing = session.evaluate()
            if failing and not override:
                return error(
                    422,
                    {
                        "message": "consistency ratio above threshold; revise or pass override=true",
                        "failing_nodes": failing,
                    },
                )
            return {node_id: _vector_payload(vec) for node_id, vec in local.items()}

    @app.get("/ranking")
    def get_ranking(override: bool = False):
        with session.lock:
            _local, result, failing = session.evaluate()
            if failing and not override:
                return error(
                    422,
                    {
                        "message": "consistency ratio above threshold; revise or pass override=true",
                        "failing_nodes": failing,
                    },
                )
            return {
                "global_scores": result.global_scores,
                "per_criterion": result.per_criterion,
                "ranking": list(result.ranking),
                "ties": [list(g) for g in result.ties],
            }

    @app.post("/sensitivity")
    async def post_sensitivity(request: Request, override: bool = False):
        try:
            body = await request.json()
        except Exception:
            return error(400, "request body must be JSON")
        if not isinstance(body, dict):
            return error(400, "body must be an object")
        factor = body.get("factor", session.project.settings.sensitivity_factor)
        if not isinstance(factor, (int, float)) or isinstance(factor, bool) or factor <= 0:
            return error(400, "'factor' must be a positive number")
        with session.lock:
            _local, result, failing = session.evaluate()
            if failing and not override:
                return error(
                    422,
                    {
                        "message": "consistency ratio above threshold; revise or pass override=true",
                        "failing_nodes": failing,
                    },
                )
            model = session.model()
            try:
                report = run_scenarios(model, result, float(factor))
            except InfeasibleBoostError as exc:
                return error(400, str(exc))
            return {
                "factor": report.factor,
                "scenarios": [
                    {
                        "name": o.scenario.name,
                        "boosted_node": o.scenario.boosted_node,
                        "weights": o.adjusted_weights.as_dict(),
                        "scores": o.global_scores,
                        "ranking": list(o.ranking),
                    }
                    for o in report.outcomes
                ],
                "stability": {a: list(r) for a, r in report.stability.items()},
                "flips": [
                    {"scenario": name, "pair": list(pair)} for name, pair in report.flips
                ],
            }

    @app.post("/save")
    def post_save():
        with session.lock:
            if not session.project_path:
                return error(400, "service was started without a project path")
            data = save_project(session.project)
            with open(session.project_path, "wb") as fh:
                fh.write(data)
            session.dirty = False
            return {"saved": True, "path": session.project_path}

    return app
