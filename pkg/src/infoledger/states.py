"""Pure states, density operators, and finite ensembles.

An ensemble is a finite source: it emits the i-th member state with
probability p_i, and its stochastic mixture is the average state
sum_i p_i rho_i.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

import numpy as np

from .linalg import ComplexOperator, DimensionMismatchError, _as_dims, outer

NORM_TOL = 1e-9
PROBABILITY_TOL = 1e-12
DENSITY_TOL = 1e-10


@dataclass(frozen=True)
class PureState:
    """Normalized complex amplitude vector tagged with subsystem dims."""

    dims: tuple[int, ...]
    amplitudes: np.ndarray

    def __post_init__(self):
        dims = _as_dims(self.dims)
        amp = np.array(self.amplitudes, dtype=complex)
        if amp.ndim != 1 or amp.size != prod(dims):
            raise ValueError(
                f"amplitude vector of length {amp.size} does not match dims {dims}"
            )
        if not np.all(np.isfinite(amp)):
            raise ValueError("amplitudes must be finite")
        norm_sq = float(np.real(np.vdot(amp, amp)))
        if abs(norm_sq - 1.0) > NORM_TOL:
            raise ValueError(f"pure state must have unit norm, got |psi|^2 = {norm_sq!r}")
        amp.setflags(write=False)
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "amplitudes", amp)

    @property
    def dim(self) -> int:
        return self.amplitudes.size


def pure_state(amplitudes, dims=None) -> PureState:
    """Build a pure state, renormalizing the given amplitudes.

    Human-entered amplitudes are welcome: anything with nonzero norm is
    rescaled to unit norm (global phase kept as given).  Only the exact zero
    vector is rejected.
    """
    amp = np.array(amplitudes, dtype=complex)
    if amp.ndim != 1:
        raise ValueError("amplitudes must be a one-dimensional sequence")
    if not np.all(np.isfinite(amp)):
        raise ValueError("amplitudes must be finite")
    if dims is None:
        dims = (amp.size,)
    dims = _as_dims(dims)
    if amp.size != prod(dims):
        raise ValueError(f"amplitude vector of length {amp.size} does not match dims {dims}")
    norm = float(np.linalg.norm(amp))
    if norm == 0.0:
        raise ValueError("zero amplitude vector cannot be normalized")
    return PureState(dims, amp / norm)


def basis_state(dims, index: int = 0) -> PureState:
    """Computational basis state |index> of the composite space."""
    dims = _as_dims(dims)
    amp = np.zeros(prod(dims), dtype=complex)
    amp[index] = 1.0
    return PureState(dims, amp)


def overlap(a: PureState, b: PureState) -> complex:
    """Inner product <a|b>, conjugate-linear in the first argument."""
    if a.dims != b.dims:
        raise DimensionMismatchError(f"overlap requires equal dims, got {a.dims} and {b.dims}")
    return complex(np.vdot(a.amplitudes, b.amplitudes))


def tensor_states(*states: PureState) -> PureState:
    """Tensor product of pure states; dims concatenate left to right."""
    if not states:
        raise ValueError("tensor_states needs at least one state")
    amp = states[0].amplitudes
    dims = states[0].dims
    for s in states[1:]:
        amp = np.kron(amp, s.amplitudes)
        dims = dims + s.dims
    return PureState(dims, amp)


@dataclass(frozen=True)
class DensityOperator:
    """Positive unit-trace Hermitian operator."""

    op: ComplexOperator

    def __post_init__(self):
        mat = self.op.matrix
        herm = float(np.max(np.abs(mat - mat.conj().T)))
        if herm > DENSITY_TOL:
            raise ValueError(f"density operator not Hermitian: max |rho - rho†| = {herm:.3e}")
        tr = complex(np.trace(mat))
        if abs(tr - 1.0) > DENSITY_TOL:
            raise ValueError(f"density operator must have unit trace, got {tr!r}")
        min_eig = float(np.linalg.eigvalsh((mat + mat.conj().T) / 2)[0])
        if min_eig < -DENSITY_TOL:
            raise ValueError(f"density operator has negative eigenvalue {min_eig:.3e}")

    @property
    def dims(self) -> tuple[int, ...]:
        return self.op.dims

    @property
    def matrix(self) -> np.ndarray:
        return self.op.matrix

    @property
    def dim(self) -> int:
        return self.op.dim


def pure_projector(psi: PureState) -> DensityOperator:
    """Density operator |psi><psi| of a pure state."""
    return DensityOperator(outer(psi))


@dataclass(frozen=True)
class Ensemble:
    """Finite source {p_i, rho_i}: probabilities sum to one, shared dims."""

    members: tuple[tuple[float, DensityOperator], ...]

    def __post_init__(self):
        members = tuple((float(p), rho) for p, rho in self.members)
        if not members:
            raise ValueError("ensemble must have at least one member")
        for p, _ in members:
            if p < 0.0 or not np.isfinite(p):
                raise ValueError(f"probabilities must be finite and >= 0, got {p!r}")
        total = sum(p for p, _ in members)
        if abs(total - 1.0) > PROBABILITY_TOL:
            raise ValueError(f"probabilities must sum to 1 within {PROBABILITY_TOL:.0e}, got {total!r}")
        dims0 = members[0][1].dims
        for _, rho in members[1:]:
            if rho.dims != dims0:
                raise DimensionMismatchError(
                    f"all ensemble members must share dims, got {dims0} and {rho.dims}"
                )
        object.__setattr__(self, "members", members)

    @property
    def dims(self) -> tuple[int, ...]:
        return self.members[0][1].dims

    def __len__(self) -> int:
        return len(self.members)


def average_state(e: Ensemble) -> DensityOperator:
    """Stochastic mixture sum_i p_i rho_i of the ensemble."""
    mat = sum(p * rho.matrix for p, rho in e.members)
    return DensityOperator(ComplexOperator(e.dims, mat))
