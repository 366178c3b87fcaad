"""Command-line front end over the full pipeline.

Data goes to stdout, diagnostics to stderr. Exit codes: 0 success,
1 validation/consistency failure, 2 usage error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .consistency import consistency_ratio, locate_inconsistency
from .errors import ConsistencyError, FahpError, ProjectError
from .hierarchy import compute_local_weights, score_alternatives, validate_hierarchy
from .matrix import crispify
from .project import build_model, export_csv, load_project, render_report
from .sensitivity import run_scenarios
from .tfn import DefuzzMethod
from .weights import DerivationMethod

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2
EXIT_IO = 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fahp",
        description="Fuzzy AHP decision engine: weights, rankings, sensitivity.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, port=False):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("project", help="path to the project JSON file")
        p.add_argument("--format", choices=["table", "json", "csv"], default="table")
        p.add_argument("--method", choices=[m.value for m in DerivationMethod])
        p.add_argument("--defuzz", choices=[m.value for m in DefuzzMethod])
        p.add_argument("--threshold", type=float, help="CR acceptability threshold")
        p.add_argument("--factor", type=float, help="sensitivity boost factor")
        p.add_argument("--node", help="restrict output to one node id")
        p.add_argument("--output", help="write output to this path instead of stdout")
        if port:
            p.add_argument("--port", type=int, default=8341)
            p.add_argument("--host", default="127.0.0.1")
        return p

    add("validate", "check the project structure and report violations")
    add("weights", "print local priority weights per node")
    add("rank", "print per-criterion and global alternative scores")
    add("sensitivity", "print per-scenario rankings and rank flips")
    add("report", "write the full markdown report")
    add("export", "write the ranking as CSV")
    add("serve", "start the local HTTP service", port=True)
    return parser


def _effective(args, settings):
    method = DerivationMethod(args.method) if args.method else settings.method
    defuzz = DefuzzMethod(args.defuzz) if args.defuzz else settings.defuzz
    threshold = args.threshold if args.threshold is not None else settings.cr_threshold
    factor = args.factor if args.factor is not None else settings.sensitivity_factor
    return method, defuzz, threshold, factor


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_validate(args, project) -> int:
    model = build_model(project)
    violations = validate_hierarchy(model)
    if args.format == "json":
        payload = [
            {"code": v.code, "node": v.node_id, "message": v.message} for v in violations
        ]
        _emit(json.dumps({"valid": not violations, "violations": payload}, indent=2) + "\n",
              args.output)
    else:
        if violations:
            lines = [f"{v.code} @ {v.node_id}: {v.message}" for v in violations]
            _emit("\n".join(lines) + "\n", args.output)
        else:
            _emit("project is valid\n", args.output)
    return EXIT_OK if not violations else EXIT_INVALID


def _weights_payload(local) -> dict:
    return {
        node_id: {
            "method": vec.method,
            "weights": {item: w for item, w in zip(vec.item_ids, vec.values)},
        }
        for node_id, vec in local.items()
    }


def _cmd_weights(args, project) -> int:
    model = build_model(project)
    method, defuzz, threshold, _ = _effective(args, project.settings)
    local = compute_local_weights(model, method, threshold, defuzz=defuzz)
    if args.node:
        if args.node not in local:
            print(f"error: unknown node '{args.node}'", file=sys.stderr)
            return EXIT_USAGE
        local = {args.node: local[args.node]}
    if args.format == "json":
        _emit(json.dumps(_weights_payload(local), indent=2) + "\n", args.output)
    elif args.format == "csv":
        lines = ["node,item,weight"]
        for node_id, vec in local.items():
            for item, w in zip(vec.item_ids, vec.values):
                lines.append(f"{node_id},{item},{w:.6f}")
        _emit("\n".join(lines) + "\n", args.output)
    else:
        lines = []
        for node_id, vec in local.items():
            row = ", ".join(f"{item}={w:.4f}" for item, w in zip(vec.item_ids, vec.values))
            lines.append(f"{node_id}: {row}")
        _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def _rank_result(args, project):
    model = build_model(project)
    method, defuzz, threshold, _ = _effective(args, project.settings)
    local = compute_local_weights(model, method, threshold, defuzz=defuzz)
    return model, score_alternatives(model, local)


def _cmd_rank(args, project) -> int:
    model, result = _rank_result(args, project)
    if args.format == "json":
        payload = {
            "per_criterion": result.per_criterion,
            "global_scores": result.global_scores,
            "ranking": list(result.ranking),
            "ties": [list(g) for g in result.ties],
        }
        _emit(json.dumps(payload, indent=2) + "\n", args.output)
    elif args.format == "csv":
        _emit(export_csv(result).decode("utf-8"), args.output)
    else:
        criteria = list(result.per_criterion)
        header = "alternative  " + "  ".join(f"{c:>8}" for c in criteria) + "    global"
        lines = [header]
        for a in result.ranking:
            cells = "  ".join(f"{result.per_criterion[c][a]:8.4f}" for c in criteria)
            lines.append(f"{a:<11}  {cells}  {result.global_scores[a]:8.4f}")
        lines.append("ranking: " + " > ".join(result.ranking))
        _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def _cmd_sensitivity(args, project) -> int:
    model, result = _rank_result(args, project)
    _, _, _, factor = _effective(args, project.settings)
    report = run_scenarios(model, result, factor)
    if args.format == "json":
        payload = {
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
            "flips": [{"scenario": name, "pair": list(pair)} for name, pair in report.flips],
        }
        _emit(json.dumps(payload, indent=2) + "\n", args.output)
    elif args.format == "csv":
        _emit(export_csv(report).decode("utf-8"), args.output)
    else:
        lines = [f"factor: {report.factor:g}"]
        for o in report.outcomes:
            lines.append(f"{o.scenario.name}: " + " > ".join(o.ranking))
        if report.flips:
            for name, (winner, loser) in report.flips:
                lines.append(f"flip in {name}: {winner} overtakes {loser}")
        else:
            lines.append("no rank flips")
        _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def _cmd_report(args, project) -> int:
    model = build_model(project)
    method, defuzz, threshold, factor = _effective(args, project.settings)
    local = compute_local_weights(model, method, threshold, defuzz=defuzz)
    result = score_alternatives(model, local)
    sens = run_scenarios(model, result, factor)
    reports = {}
    suggestions = {}
    for node_id, matrix in model.judgments.items():
        crisp = crispify(matrix, defuzz)
        vec = local[node_id].as_array()
        reports[node_id] = consistency_ratio(crisp, vec, threshold)
        if not reports[node_id].acceptable:
            suggestions[node_id] = locate_inconsistency(crisp, vec, 3)
    _emit(render_report(model, result, sens, reports, suggestions), args.output)
    return EXIT_OK


def _cmd_export(args, project) -> int:
    _, result = _rank_result(args, project)
    _emit(export_csv(result).decode("utf-8"), args.output)
    return EXIT_OK


def _cmd_serve(args, project) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(project, project_path=args.project)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return EXIT_OK


_COMMANDS = {
    "validate": _cmd_validate,
    "weights": _cmd_weights,
    "rank": _cmd_rank,
    "sensitivity": _cmd_sensitivity,
    "report": _cmd_report,
    "export": _cmd_export,
    "serve": _cmd_serve,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        project = load_project(args.project)
    except OSError as exc:
        print(f"error: cannot read '{args.project}': {exc.strerror or exc}", file=sys.stderr)
        return EXIT_IO
    except ProjectError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    try:
        return _COMMANDS[args.command](args, project)
    except ConsistencyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except FahpError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
