"""Scenario file parsing, validation diagnostics, and round-tripping."""

from pathlib import Path

import numpy as np
import pytest

from infoledger import (
    ScenarioFileError,
    audit,
    build_scenario,
    format_scenario_file,
    parse_scenario_file,
)

SCENARIO_DIR = Path(__file__).resolve().parents[1] / "demos" / "scenarios"

MINIMAL_CLONING = """
version: 1
kind: cloning
psi1: [[1, 0], [0, 0]]
psi2: [[0.7071, 0], [0.7071, 0]]
"""


def test_minimal_cloning_file_parses():
    sf = parse_scenario_file(MINIMAL_CLONING)
    assert sf.kind == "cloning"
    assert sf.search is None
    scenario = build_scenario(sf)
    assert abs(scenario.input_overlap - 1 / np.sqrt(2)) < 1e-4


def test_probabilities_key_is_rejected():
    text = MINIMAL_CLONING + "probabilities: [0.5, 0.5]\n"
    with pytest.raises(ScenarioFileError, match="probabilities"):
        parse_scenario_file(text)


def test_non_finite_amplitude_is_rejected():
    text = """
version: 1
kind: cloning
psi1: [[.nan, 0], [0, 0]]
psi2: [[1, 0], [0, 0]]
"""
    with pytest.raises(ScenarioFileError, match="finite"):
        parse_scenario_file(text)


def test_unknown_kind_and_bad_version():
    with pytest.raises(ScenarioFileError, match="kind"):
        parse_scenario_file("version: 1\nkind: teleporting\npsi1: [[1, 0]]\npsi2: [[1, 0]]\n")
    with pytest.raises(ScenarioFileError, match="version"):
        parse_scenario_file("version: 2\nkind: cloning\npsi1: [[1, 0]]\npsi2: [[1, 0]]\n")
    with pytest.raises(ScenarioFileError, match="version"):
        parse_scenario_file("kind: cloning\npsi1: [[1, 0]]\npsi2: [[1, 0]]\n")


def test_missing_required_state_named_in_error():
    with pytest.raises(ScenarioFileError, match="psi2"):
        parse_scenario_file("version: 1\nkind: cloning\npsi1: [[1, 0], [0, 0]]\n")
    with pytest.raises(ScenarioFileError, match="ancilla"):
        parse_scenario_file(
            "version: 1\nkind: generalized-deleting\npsi1: [[1, 0]]\npsi2: [[1, 0]]\n"
        )


def test_env_states_must_come_together():
    text = MINIMAL_CLONING + "env1: [[1, 0], [0, 0]]\n"
    with pytest.raises(ScenarioFileError, match="env"):
        parse_scenario_file(text)


def test_malformed_amplitude_entries():
    with pytest.raises(ScenarioFileError, match="psi1"):
        parse_scenario_file("version: 1\nkind: cloning\npsi1: [[1, 0, 0]]\npsi2: [[1, 0]]\n")
    with pytest.raises(ScenarioFileError, match="psi1"):
        parse_scenario_file("version: 1\nkind: cloning\npsi1: [1, 0]\npsi2: [[1, 0]]\n")


def test_search_block_validation():
    good = MINIMAL_CLONING + "search:\n  restarts: 5\n  iterations: 100\n  seed: 2\n"
    sf = parse_scenario_file(good)
    assert (sf.search.restarts, sf.search.iterations, sf.search.seed) == (5, 100, 2)
    with pytest.raises(ScenarioFileError, match="restarts"):
        parse_scenario_file(MINIMAL_CLONING + "search:\n  restarts: 0\n  iterations: 1\n  seed: 2\n")
    with pytest.raises(ScenarioFileError, match="budget|iterations"):
        parse_scenario_file(MINIMAL_CLONING + "search:\n  restarts: 5\n  seed: 2\n")
    with pytest.raises(ScenarioFileError, match="walltime"):
        parse_scenario_file(
            MINIMAL_CLONING + "search:\n  restarts: 5\n  iterations: 1\n  seed: 2\n  walltime: 3\n"
        )


def test_yaml_syntax_error_reports_line():
    with pytest.raises(ScenarioFileError, match="line"):
        parse_scenario_file("version: 1\nkind: cloning\npsi1: [[1, 0]\n")


def test_zero_state_rejected_at_build():
    text = "version: 1\nkind: cloning\npsi1: [[0, 0], [0, 0]]\npsi2: [[1, 0], [0, 0]]\n"
    sf = parse_scenario_file(text)
    with pytest.raises(ScenarioFileError, match="psi1"):
        build_scenario(sf)


def test_every_shipped_scenario_file_parses_and_round_trips():
    paths = sorted(SCENARIO_DIR.glob("*.yaml"))
    assert len(paths) >= 5
    for path in paths:
        sf = parse_scenario_file(path.read_text())
        scenario = build_scenario(sf)
        report = audit(scenario)

        rebuilt = build_scenario(parse_scenario_file(format_scenario_file(sf)))
        assert abs(rebuilt.input_overlap - scenario.input_overlap) < 1e-15
        assert abs(rebuilt.target_overlap - scenario.target_overlap) < 1e-15
        assert audit(rebuilt) == report
