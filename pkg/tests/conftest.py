"""Shared corpus fixtures, loaded once per session from the bundled examples."""

import pytest

from shadowcalc import diagram_from_json, example, example_names, shadow_from_json

# Link diagrams in S^3, paired with their component counts.
LINK_NAMES = {
    "unknot": 1,
    "kink-positive": 1,
    "kink-negative": 1,
    "hopf": 2,
    "unlink-2": 2,
    "trefoil": 1,
    "figure-eight": 1,
}

GRAPH_DIAGRAM_NAMES = ("theta", "theta-123")

# Shadows that certify a complete enumeration at the default cap.
COMPLETE_SHADOW_NAMES = ("shadow-theta-123", "shadow-threaded-g2")


def load_example(name):
    doc = example(name)
    if doc["kind"] == "diagram":
        return diagram_from_json(doc["data"])
    return shadow_from_json(doc["data"])


@pytest.fixture(scope="session")
def link_diagrams():
    return {name: load_example(name) for name in LINK_NAMES}


@pytest.fixture(scope="session")
def graph_diagrams():
    return {name: load_example(name) for name in GRAPH_DIAGRAM_NAMES}


@pytest.fixture(scope="session")
def complete_shadows():
    return {name: load_example(name) for name in COMPLETE_SHADOW_NAMES}


def test_examples_registry_covers_fixtures():
    names = set(example_names())
    for needed in (*LINK_NAMES, *GRAPH_DIAGRAM_NAMES, *COMPLETE_SHADOW_NAMES):
        assert needed in names
