"""Project file parsing, round-trips, CSV export, and report rendering."""

import io
import json

import numpy as np
import pytest

from fahp.consistency import consistency_ratio, locate_inconsistency
from fahp.errors import (
    ProjectParseError,
    ProjectValidationError,
    ProjectVersionError,
)
from fahp.fixture import fixture_path
from fahp.hierarchy import compute_local_weights, score_alternatives
from fahp.matrix import crispify
from fahp.project import (
    JudgmentSpec,
    NodeSpec,
    ProjectFile,
    Settings,
    build_model,
    export_csv,
    load_project,
    render_report,
    save_project,
)
from fahp.sensitivity import run_scenarios
from fahp.weights import derive_gm_middle

from conftest import random_project


def test_fixture_structure(fixture):
    p = fixture.project
    assert len(p.criteria) == 5
    assert sum(len(c.children) for c in p.criteria) == 30
    assert len(p.alternatives) == 5
    assert fixture.name == "turkiye-renewables-2024"
    assert fixture.expected["ranking"] == ["A2", "A1", "A5", "A4", "A3"]


def test_load_accepts_path_str_bytes_and_stream(fixture):
    path = fixture_path()
    text = path.read_text(encoding="utf-8")
    for source in (path, str(path), text, text.encode("utf-8"), io.StringIO(text)):
        p = load_project(source)
        assert p.goal == fixture.project.goal


def test_unknown_judgment_node_named():
    doc = json.loads(fixture_path().read_text(encoding="utf-8"))
    doc["judgments"][1]["node"] = "C99"
    with pytest.raises(ProjectValidationError) as err:
        load_project(json.dumps(doc))
    assert "C99" in str(err.value)


def test_truncated_file_parse_error_with_location():
    text = fixture_path().read_text(encoding="utf-8")[:500]
    with pytest.raises(ProjectParseError) as err:
        load_project(text)
    assert "line" in str(err.value)
    assert err.value.line is not None


def test_unsupported_schema_version():
    doc = json.loads(fixture_path().read_text(encoding="utf-8"))
    doc["schema_version"] = 99
    with pytest.raises(ProjectVersionError):
        load_project(json.dumps(doc))


def test_direct_weights_must_roughly_sum_to_one():
    doc = json.loads(fixture_path().read_text(encoding="utf-8"))
    doc["direct_weights"]["C11"]["A1"] = 0.9
    with pytest.raises(ProjectValidationError) as err:
        load_project(json.dumps(doc))
    assert "C11" in str(err.value)


def test_duplicate_judgment_rejected():
    doc = json.loads(fixture_path().read_text(encoding="utf-8"))
    doc["judgments"].append(doc["judgments"][0])
    with pytest.raises(ProjectValidationError):
        load_project(json.dumps(doc))


def test_fixture_roundtrip(fixture):
    data = save_project(fixture.project)
    again = load_project(data)
    assert again == fixture.project


def test_tfn_grid_judgments_roundtrip_exact():
    upper = (0.123456789012, 0.2, 0.25)
    lower = (1 / upper[2], 1 / upper[1], 1 / upper[0])
    project = ProjectFile(
        goal="g",
        criteria=(NodeSpec("K1", "k1"), NodeSpec("K2", "k2")),
        alternatives=(("A1", "a"), ("A2", "b")),
        judgments=(
            JudgmentSpec(
                node="goal",
                tfns=(((1.0, 1.0, 1.0), upper), (lower, (1.0, 1.0, 1.0))),
            ),
        ),
        direct_weights={
            "K1": {"A1": 0.25, "A2": 0.75},
            "K2": {"A1": 0.5, "A2": 0.5},
        },
    )
    again = load_project(save_project(project))
    assert again.judgments[0].tfns == project.judgments[0].tfns
    assert again == project


def test_tfn_grid_reciprocity_enforced_on_load():
    doc = {
        "schema_version": 1,
        "goal": "g",
        "criteria": [{"id": "K1", "label": "k"}, {"id": "K2", "label": "k2"}],
        "alternatives": [{"id": "A1", "label": "a"}, {"id": "A2", "label": "b"}],
        "judgments": [
            {"node": "goal", "tfns": [[[1, 1, 1], [2, 3, 4]], [[0.3, 0.4, 0.6], [1, 1, 1]]]}
        ],
        "direct_weights": {
            "K1": {"A1": 0.5, "A2": 0.5},
            "K2": {"A1": 0.5, "A2": 0.5},
        },
    }
    with pytest.raises(ProjectValidationError) as err:
        load_project(json.dumps(doc))
    assert "goal" in str(err.value)


def test_empty_alternatives_refused_before_save():
    project = ProjectFile(
        goal="g",
        criteria=(NodeSpec("K1", "k"),),
        alternatives=(),
        judgments=(),
    )
    with pytest.raises(ProjectValidationError):
        save_project(project)


def test_random_projects_roundtrip():
    rng = np.random.default_rng(1234)
    for _ in range(30):
        project = random_project(rng)
        again = load_project(save_project(project))
        assert again == project


def test_build_model_renormalizes_direct_weights(fixture):
    model = build_model(fixture.project)
    for leaf_id, vector in model.direct_weights.items():
        assert sum(vector.values()) == pytest.approx(1.0, abs=1e-12), leaf_id
    # verbatim values in the file itself may carry rounding residue
    raw = fixture.project.direct_weights["C12"]
    assert sum(raw.values()) != 1.0


def test_export_csv_layout(result):
    data = export_csv(result).decode("utf-8")
    lines = data.strip().split("\n")
    header = lines[0].split(",")
    assert header == ["alternative", "C1", "C2", "C3", "C4", "C5", "global"]
    assert len(header) == 5 + 2
    assert len(lines) == 6
    rows = {line.split(",")[0]: line.split(",")[1:] for line in lines[1:]}
    a2 = [float(x) for x in rows["A2"]]
    published = (0.276, 0.222, 0.248, 0.162, 0.261)
    for got, want in zip(a2[:5], published):
        assert got == pytest.approx(want, abs=5e-4)
    assert a2[5] == pytest.approx(0.24, abs=5e-3)
    # formatting contract: six decimals, dot separator
    for cell in lines[1].split(",")[1:]:
        whole, frac = cell.split(".")
        assert len(frac) == 6


def test_export_csv_sensitivity_baseline_only(model, result):
    report = run_scenarios(model, result, 1.5, boosted_nodes=[])
    data = export_csv(report).decode("utf-8")
    lines = data.strip().split("\n")
    assert lines[0] == "scenario,alternative,score,rank"
    assert len(lines) == 1 + 5
    assert all(line.startswith("baseline,") for line in lines[1:])


def test_export_csv_rejects_other_types():
    with pytest.raises(TypeError):
        export_csv({"not": "a result"})


def test_report_mentions_final_order_labels(model, result):
    text = render_report(model, result)
    assert "Final order: Solar, Wind, Hydroelectric, Biomass, Geothermal." in text


def test_report_deterministic(model, result):
    sens = run_scenarios(model, result, 1.5)
    reports = {}
    for node_id, matrix in model.judgments.items():
        reports[node_id] = consistency_ratio(
            crispify(matrix), derive_gm_middle(matrix).as_array()
        )
    one = render_report(model, result, sens, reports)
    two = render_report(model, result, sens, reports)
    assert one == two
    assert "## Sensitivity scenarios" in one
    assert "## Consistency annex" in one


def test_report_flags_cr_failure():
    from fahp.hierarchy import Alternative, CriterionNode, Hierarchy
    from fahp.matrix import FuzzyComparisonMatrix

    model = Hierarchy(
        goal="g",
        criteria=tuple(CriterionNode(f"K{k}", f"k{k}") for k in (1, 2, 3)),
        alternatives=(Alternative("A1", "a"), Alternative("A2", "b")),
    )
    for k in (1, 2, 3):
        model.direct_weights[f"K{k}"] = {"A1": 0.5, "A2": 0.5}
    # a strongly cyclic goal matrix fails the CR gate
    model.judgments["goal"] = FuzzyComparisonMatrix.from_scores(
        ("K1", "K2", "K3"), [(0, 1, 9), (0, 2, -9), (1, 2, 9)]
    )
    local = compute_local_weights(model, override=True)
    result = score_alternatives(model, local)
    crisp = crispify(model.judgments["goal"])
    vec = local["goal"].as_array()
    report = consistency_ratio(crisp, vec)
    assert not report.acceptable
    text = render_report(
        model,
        result,
        consistency={"goal": report},
        suggestions={"goal": locate_inconsistency(crisp, vec, 3)},
    )
    assert "goal" in text
    assert "exceeds the CR threshold" in text
    assert "revise pair" in text


def test_settings_parsed_and_defaulted():
    doc = json.loads(fixture_path().read_text(encoding="utf-8"))
    del doc["settings"]
    p = load_project(json.dumps(doc))
    assert p.settings == Settings()
    doc["settings"] = {"method": "buckley", "cr_threshold": 0.2}
    p2 = load_project(json.dumps(doc))
    assert p2.settings.method.value == "buckley"
    assert p2.settings.cr_threshold == 0.2
    doc["settings"] = {"method": "nope"}
    with pytest.raises(ProjectValidationError):
        load_project(json.dumps(doc))
