"""Bundled reference dataset: renewable-energy prioritization for Türkiye.

Five alternatives (wind, solar, geothermal, biomass, hydroelectric) are
judged against 30 criteria in five groups. The six aggregated comparison
matrices are stored as signed precise scores; the 30 per-leaf alternative
weight vectors are attached as direct weights. The dataset's reference
values (expected weights, scores, ranking, reported consistency ratios)
travel in the project metadata.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .project import ProjectFile, load_project

FIXTURE_NAME = "turkiye-renewables-2024"


@dataclass(frozen=True)
class Fixture:
    name: str
    project: ProjectFile
    expected: dict


def fixture_path() -> Path:
    """Filesystem path of the bundled project file."""
    return Path(resources.files("fahp").joinpath("data/turkiye.json"))


def load_fixture() -> Fixture:
    project = load_project(fixture_path())
    return Fixture(
        name=project.metadata.get("name", FIXTURE_NAME),
        project=project,
        expected=project.metadata.get("reference", {}),
    )
