"""Fuzzy AHP decision engine.

Turns linguistic pairwise judgments into criterion weights and ranked
alternatives, with consistency checking and scenario-based sensitivity
analysis. See the README for the CLI, the HTTP service and the project
file format.
"""

from .consistency import (
    ConsistencyReport,
    consistency_ratio,
    lambda_max_estimate,
    locate_inconsistency,
    random_index,
)
from .errors import (
    ConsistencyError,
    DuplicatePairError,
    FahpError,
    IncompleteMatrixError,
    InfeasibleBoostError,
    ProjectError,
    ProjectParseError,
    ProjectValidationError,
    ProjectVersionError,
    ShapeError,
)
from .fixture import Fixture, fixture_path, load_fixture
from .hierarchy import (
    GOAL_ID,
    Alternative,
    CriterionNode,
    DecisionResult,
    Hierarchy,
    Violation,
    compute_local_weights,
    evaluate,
    rank_alternatives,
    score_alternatives,
    validate_hierarchy,
)
from .matrix import (
    CrispMatrix,
    ExpertJudgmentSet,
    FuzzyComparisonMatrix,
    aggregate_experts,
    crispify,
)
from .project import (
    ProjectFile,
    Settings,
    build_model,
    export_csv,
    load_project,
    render_report,
    save_project,
)
from .sensitivity import (
    Scenario,
    ScenarioOutcome,
    SensitivityReport,
    run_scenarios,
    scenario_weights,
)
from .tfn import TFN, SCALE, DefuzzMethod, judgment_tfn, scale_tfn, score_from_tfn
from .weights import (
    DerivationMethod,
    WeightVector,
    derive_buckley,
    derive_gm_middle,
    derive_weights,
)

__version__ = "0.1.0"
