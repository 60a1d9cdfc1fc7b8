"""Scenario files: a small line-oriented key-value format (YAML mapping subset).

Amplitudes are written as [re, im] pairs.  The parser is strict: the format
version must match, unknown keys are rejected by name, and every number must
be finite.  The full grammar is documented in the repository README.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import yaml

from .scenarios import (
    Scenario,
    classical_copy_scenario,
    cloning_scenario,
    deleting_scenario,
    generalized_deleting_scenario,
)
from .states import PureState, pure_state

FORMAT_VERSION = 1

KINDS = ("cloning", "deleting", "generalized-deleting", "classical-copy")

_STATE_KEYS = {
    "cloning": {"required": ("psi1", "psi2"), "optional": ("blank", "env1", "env2")},
    "deleting": {"required": ("psi1", "psi2"), "optional": ("standard",)},
    "generalized-deleting": {"required": ("psi1", "psi2", "ancilla1", "ancilla2"), "optional": ()},
    "classical-copy": {"required": ("psi1", "psi2"), "optional": ()},
}

_SEARCH_KEYS = ("restarts", "iterations", "seed")


class ScenarioFileError(ValueError):
    """A scenario file failed validation; the message names the offending key or line."""


@dataclass(frozen=True)
class SearchBudget:
    restarts: int
    iterations: int
    seed: int


@dataclass(frozen=True)
class ScenarioFile:
    """Validated contents of a scenario file."""

    version: int
    kind: str
    states: dict[str, tuple[complex, ...]]
    search: SearchBudget | None = None
    label: str | None = None


def _require_int(value, key: str, minimum: int | None = None) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ScenarioFileError(f"key '{key}' must be an integer, got {value!r}")
    if minimum is not None and value < minimum:
        raise ScenarioFileError(f"key '{key}' must be >= {minimum}, got {value}")
    return value


def _parse_amplitudes(value, key: str) -> tuple[complex, ...]:
    if not isinstance(value, list) or not value:
        raise ScenarioFileError(f"key '{key}' must be a nonempty list of [re, im] pairs")
    amps = []
    for i, entry in enumerate(value):
        if (
            not isinstance(entry, list)
            or len(entry) != 2
            or any(isinstance(x, bool) or not isinstance(x, (int, float)) for x in entry)
        ):
            raise ScenarioFileError(f"key '{key}' entry {i} must be a [re, im] pair of numbers")
        re, im = float(entry[0]), float(entry[1])
        if not (math.isfinite(re) and math.isfinite(im)):
            raise ScenarioFileError(f"key '{key}' entry {i} is not finite")
        amps.append(complex(re, im))
    return tuple(amps)


def _parse_search(value) -> SearchBudget:
    if not isinstance(value, dict):
        raise ScenarioFileError("key 'search' must be a mapping of restarts/iterations/seed")
    unknown = sorted(set(value) - set(_SEARCH_KEYS))
    if unknown:
        raise ScenarioFileError(f"unknown key '{'search.' + unknown[0]}'")
    missing = [k for k in _SEARCH_KEYS if k not in value]
    if missing:
        raise ScenarioFileError(f"key 'search' is missing '{missing[0]}'")
    return SearchBudget(
        restarts=_require_int(value["restarts"], "search.restarts", minimum=1),
        iterations=_require_int(value["iterations"], "search.iterations", minimum=1),
        seed=_require_int(value["seed"], "search.seed"),
    )


def parse_scenario_file(text: str) -> ScenarioFile:
    """Parse and validate scenario file text."""
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        mark = getattr(exc, "problem_mark", None)
        where = f" at line {mark.line + 1}" if mark is not None else ""
        raise ScenarioFileError(f"syntax error{where}: {exc}") from exc
    if not isinstance(data, dict):
        raise ScenarioFileError("scenario file must be a key-value mapping")

    if "version" not in data:
        raise ScenarioFileError("missing required key 'version'")
    version = _require_int(data["version"], "version")
    if version != FORMAT_VERSION:
        raise ScenarioFileError(f"unsupported format version {version}, expected {FORMAT_VERSION}")

    if "kind" not in data:
        raise ScenarioFileError("missing required key 'kind'")
    kind = data["kind"]
    if kind not in KINDS:
        raise ScenarioFileError(f"unknown kind {kind!r}, expected one of {', '.join(KINDS)}")

    spec = _STATE_KEYS[kind]
    allowed = {"version", "kind", "label", "search", *spec["required"], *spec["optional"]}
    unknown = sorted(set(data) - allowed)
    if unknown:
        raise ScenarioFileError(f"unknown key '{unknown[0]}' for kind '{kind}'")

    states: dict[str, tuple[complex, ...]] = {}
    for key in spec["required"]:
        if key not in data:
            raise ScenarioFileError(f"kind '{kind}' requires key '{key}'")
        states[key] = _parse_amplitudes(data[key], key)
    for key in spec["optional"]:
        if key in data:
            states[key] = _parse_amplitudes(data[key], key)
    if kind == "cloning" and (("env1" in states) != ("env2" in states)):
        raise ScenarioFileError("keys 'env1' and 'env2' must be given together")

    label = None
    if "label" in data:
        if not isinstance(data["label"], str):
            raise ScenarioFileError("key 'label' must be a string")
        label = data["label"]

    search = _parse_search(data["search"]) if "search" in data else None

    return ScenarioFile(version=version, kind=kind, states=states, search=search, label=label)


def _state(sf: ScenarioFile, key: str) -> PureState | None:
    amps = sf.states.get(key)
    if amps is None:
        return None
    try:
        return pure_state(np.array(amps, dtype=complex))
    except ValueError as exc:
        raise ScenarioFileError(f"key '{key}': {exc}") from exc


def build_scenario(sf: ScenarioFile) -> Scenario:
    """Construct the scenario a validated file describes."""
    psi1 = _state(sf, "psi1")
    psi2 = _state(sf, "psi2")
    try:
        if sf.kind == "cloning":
            return cloning_scenario(
                psi1,
                psi2,
                blank=_state(sf, "blank"),
                env1=_state(sf, "env1"),
                env2=_state(sf, "env2"),
            )
        if sf.kind == "deleting":
            return deleting_scenario(psi1, psi2, standard=_state(sf, "standard"))
        if sf.kind == "generalized-deleting":
            return generalized_deleting_scenario(
                psi1, psi2, _state(sf, "ancilla1"), _state(sf, "ancilla2")
            )
        return classical_copy_scenario(psi1, psi2)
    except ValueError as exc:
        raise ScenarioFileError(str(exc)) from exc


def _format_amplitudes(amps: tuple[complex, ...]) -> str:
    pairs = ", ".join(f"[{z.real!r}, {z.imag!r}]" for z in amps)
    return f"[{pairs}]"


def format_scenario_file(sf: ScenarioFile) -> str:
    """Serialize back to canonical file text; parses to an equivalent file."""
    lines = [f"version: {sf.version}", f"kind: {sf.kind}"]
    if sf.label is not None:
        lines.append(f"label: {sf.label!r}")
    order = _STATE_KEYS[sf.kind]["required"] + _STATE_KEYS[sf.kind]["optional"]
    for key in order:
        if key in sf.states:
            lines.append(f"{key}: {_format_amplitudes(sf.states[key])}")
    if sf.search is not None:
        lines.append("search:")
        lines.append(f"  restarts: {sf.search.restarts}")
        lines.append(f"  iterations: {sf.search.iterations}")
        lines.append(f"  seed: {sf.search.seed}")
    return "\n".join(lines) + "\n"
