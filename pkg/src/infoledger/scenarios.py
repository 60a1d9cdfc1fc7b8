"""Hypothesized copy and delete transformations as input/target ensemble pairs.

A scenario never claims the transformation is realizable: it records the
equal-probability two-state input ensemble, the target output ensemble, the
regime (open systems may discard subsystems, closed systems may not), and
the derived pair overlaps.  Whether any mixing-linear dynamics realizes the
target is a separate question answered by the audit and search modules.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .linalg import DimensionMismatchError
from .states import (
    Ensemble,
    PureState,
    basis_state,
    overlap,
    pure_projector,
    tensor_states,
)

OVERLAP_TOL = 1e-12
PURITY_TOL = 1e-9
ORTHOGONALITY_TOL = 1e-12

OPEN = "open"
CLOSED = "closed"


class NotADeletingMapError(ValueError):
    """The proposed ancilla outputs are not strictly nearer than the inputs."""


def _pair_overlap(e: Ensemble) -> float:
    (_, rho1), (_, rho2) = e.members
    return math.sqrt(max(0.0, float(np.real(np.trace(rho1.matrix @ rho2.matrix)))))


def _check_two_state_half_half(e: Ensemble, which: str):
    if len(e.members) != 2:
        raise ValueError(f"{which} ensemble must have exactly two members")
    for p, rho in e.members:
        if abs(p - 0.5) > OVERLAP_TOL:
            raise ValueError(f"{which} ensemble probabilities must both be 1/2, got {p!r}")
        purity = float(np.real(np.trace(rho.matrix @ rho.matrix)))
        if purity < 1.0 - PURITY_TOL:
            raise ValueError(f"{which} ensemble members must be pure, got purity {purity!r}")


@dataclass(frozen=True)
class Scenario:
    """Two-state input ensemble, target output ensemble, and regime."""

    input_ensemble: Ensemble
    target_ensemble: Ensemble
    regime: str
    label: str
    input_overlap: float
    target_overlap: float

    def __post_init__(self):
        if self.regime not in (OPEN, CLOSED):
            raise ValueError(f"regime must be '{OPEN}' or '{CLOSED}', got {self.regime!r}")
        _check_two_state_half_half(self.input_ensemble, "input")
        _check_two_state_half_half(self.target_ensemble, "target")
        for name, stored, ensemble in (
            ("input_overlap", self.input_overlap, self.input_ensemble),
            ("target_overlap", self.target_overlap, self.target_ensemble),
        ):
            if not (-OVERLAP_TOL <= stored <= 1.0 + OVERLAP_TOL):
                raise ValueError(f"{name} must lie in [0, 1], got {stored!r}")
            computed = _pair_overlap(ensemble)
            if abs(stored - computed) > OVERLAP_TOL:
                raise ValueError(
                    f"{name} {stored!r} disagrees with the computed member overlap {computed!r}"
                )


def _two_member_ensemble(a: PureState, b: PureState) -> Ensemble:
    return Ensemble(((0.5, pure_projector(a)), (0.5, pure_projector(b))))


def cloning_scenario(
    psi1: PureState,
    psi2: PureState,
    blank: PureState | None = None,
    env1: PureState | None = None,
    env2: PureState | None = None,
) -> Scenario:
    """Hypothesized copier |psi>|blank>|0_E> -> |psi>|psi>|e_psi>.

    The environment defaults to a trivial one-dimensional register, which
    makes the bare two-slot copier a degenerate case of the same map.  The
    input overlap is c = |<psi1|psi2>|; the target overlap is
    c^2 * |<e1|e2>|, strictly smaller whenever 0 < c < 1.
    """
    if psi1.dims != psi2.dims:
        raise DimensionMismatchError(f"source states differ in dims: {psi1.dims} vs {psi2.dims}")
    if blank is None:
        blank = basis_state(psi1.dims)
    if blank.dims != psi1.dims:
        raise DimensionMismatchError(
            f"blank state dims {blank.dims} must match the copy slot dims {psi1.dims}"
        )
    if (env1 is None) != (env2 is None):
        raise ValueError("provide both environment states or neither")
    if env1 is None:
        env1 = env2 = basis_state((1,))
    if env1.dims != env2.dims:
        raise DimensionMismatchError(f"environment states differ in dims: {env1.dims} vs {env2.dims}")
    env_start = basis_state(env1.dims)

    inputs = _two_member_ensemble(
        tensor_states(psi1, blank, env_start),
        tensor_states(psi2, blank, env_start),
    )
    targets = _two_member_ensemble(
        tensor_states(psi1, psi1, env1),
        tensor_states(psi2, psi2, env2),
    )
    c = abs(overlap(psi1, psi2))
    c_out = c * c * abs(overlap(env1, env2))
    return Scenario(
        input_ensemble=inputs,
        target_ensemble=targets,
        regime=OPEN,
        label=f"cloning (input overlap {c:.6f})",
        input_overlap=c,
        target_overlap=c_out,
    )


def deleting_scenario(
    psi1: PureState,
    psi2: PureState,
    standard: PureState | None = None,
) -> Scenario:
    """Hypothesized closed-system deleter |psi>|psi> -> |psi>|standard>.

    The doubled inputs have overlap |<psi1|psi2>|^2, the targets only
    |<psi1|psi2>|: deletion moves the pair closer together.
    """
    if psi1.dims != psi2.dims:
        raise DimensionMismatchError(f"source states differ in dims: {psi1.dims} vs {psi2.dims}")
    if standard is None:
        standard = basis_state(psi1.dims)
    if standard.dims != psi1.dims:
        raise DimensionMismatchError(
            f"standard state dims {standard.dims} must match the deleted slot dims {psi1.dims}"
        )
    inputs = _two_member_ensemble(tensor_states(psi1, psi1), tensor_states(psi2, psi2))
    targets = _two_member_ensemble(tensor_states(psi1, standard), tensor_states(psi2, standard))
    m = abs(overlap(psi1, psi2))
    return Scenario(
        input_ensemble=inputs,
        target_ensemble=targets,
        regime=CLOSED,
        label=f"deleting (source overlap {m:.6f})",
        input_overlap=m * m,
        target_overlap=m,
    )


def generalized_deleting_scenario(
    psi1: PureState,
    psi2: PureState,
    a1: PureState,
    a2: PureState,
) -> Scenario:
    """Closed-system map |psi>|psi> -> |psi>|a_psi> with nearer ancilla outputs.

    Requires |<a1|a2>| > |<psi1|psi2>| strictly; otherwise the map does not
    delete anything and is rejected.  With a1 = a2 this reduces exactly to
    ``deleting_scenario``.
    """
    if psi1.dims != psi2.dims:
        raise DimensionMismatchError(f"source states differ in dims: {psi1.dims} vs {psi2.dims}")
    if a1.dims != psi1.dims or a2.dims != psi1.dims:
        raise DimensionMismatchError("ancilla outputs must live in the deleted slot's space")
    m = abs(overlap(psi1, psi2))
    g = abs(overlap(a1, a2))
    if not g > m:
        raise NotADeletingMapError(
            f"not a deleting map: ancilla overlap {g!r} must strictly exceed source overlap {m!r}"
        )
    inputs = _two_member_ensemble(tensor_states(psi1, psi1), tensor_states(psi2, psi2))
    targets = _two_member_ensemble(tensor_states(psi1, a1), tensor_states(psi2, a2))
    return Scenario(
        input_ensemble=inputs,
        target_ensemble=targets,
        regime=CLOSED,
        label=f"generalized deleting (source overlap {m:.6f}, ancilla overlap {g:.6f})",
        input_overlap=m * m,
        target_overlap=m * g,
    )


def classical_copy_scenario(bit0: PureState, bit1: PureState) -> Scenario:
    """Copier fed with two exactly orthogonal states (a classical bit source)."""
    if bit0.dims != bit1.dims:
        raise DimensionMismatchError(f"bit states differ in dims: {bit0.dims} vs {bit1.dims}")
    c = abs(overlap(bit0, bit1))
    if c > ORTHOGONALITY_TOL:
        raise ValueError(f"classical copy needs exactly orthogonal states, got overlap {c!r}")
    scenario = cloning_scenario(bit0, bit1)
    return replace(scenario, label="classical copy (orthogonal bit source)")


def identity_scenario(psi1: PureState, psi2: PureState) -> Scenario:
    """Target equals input: the do-nothing map, trivially realizable."""
    if psi1.dims != psi2.dims:
        raise DimensionMismatchError(f"source states differ in dims: {psi1.dims} vs {psi2.dims}")
    e = _two_member_ensemble(psi1, psi2)
    c = abs(overlap(psi1, psi2))
    return Scenario(
        input_ensemble=e,
        target_ensemble=e,
        regime=CLOSED,
        label=f"identity (overlap {c:.6f})",
        input_overlap=c,
        target_overlap=c,
    )
