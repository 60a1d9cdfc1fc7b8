"""Mixing-linear dynamics on density operators.

Supported channels: unitary conjugation, ancilla attachment, subsystem
discard, Kraus maps, classical stochastic maps on diagonal states, and
sequential composition.  All of them act linearly over stochastic mixtures;
``check_mixing_linearity`` measures the residual directly.
"""

from __future__ import annotations

import abc
from dataclasses import dataclass
from math import prod

import numpy as np

from .linalg import ComplexOperator, DimensionMismatchError, partial_trace, tensor_product
from .states import DensityOperator, Ensemble, PureState, average_state, outer

UNITARY_TOL = 1e-10
KRAUS_TOL = 1e-10
STOCHASTIC_TOL = 1e-12
DIAGONAL_TOL = 1e-10


class Channel(abc.ABC):
    """A map from density operators to density operators."""

    @property
    def input_dims(self) -> tuple[int, ...] | None:
        """Fixed input dims, or None when the channel accepts any dims."""
        return None

    @abc.abstractmethod
    def output_dims(self, dims: tuple[int, ...]) -> tuple[int, ...]:
        """Validate input dims and return the output dims."""

    @abc.abstractmethod
    def apply(self, rho: DensityOperator) -> DensityOperator:
        """Apply the channel to a single density operator."""


@dataclass(frozen=True)
class Unitary(Channel):
    """rho -> U rho U†."""

    operator: ComplexOperator

    def __post_init__(self):
        u = self.operator.matrix
        deviation = float(np.max(np.abs(u.conj().T @ u - np.eye(u.shape[0]))))
        if deviation > UNITARY_TOL:
            raise ValueError(f"operator is not unitary: max |U†U - I| = {deviation:.3e}")

    @property
    def input_dims(self):
        return self.operator.dims

    def output_dims(self, dims):
        if tuple(dims) != self.operator.dims:
            raise DimensionMismatchError(
                f"unitary acts on dims {self.operator.dims}, got {tuple(dims)}"
            )
        return self.operator.dims

    def apply(self, rho):
        self.output_dims(rho.dims)
        u = self.operator.matrix
        return DensityOperator(ComplexOperator(rho.dims, u @ rho.matrix @ u.conj().T))


@dataclass(frozen=True)
class AppendAncilla(Channel):
    """rho -> rho ⊗ |a><a| for a fixed pure ancilla (system enlargement)."""

    ancilla: PureState

    def output_dims(self, dims):
        return tuple(dims) + self.ancilla.dims

    def apply(self, rho):
        return DensityOperator(tensor_product(rho.op, outer(self.ancilla)))


@dataclass(frozen=True)
class Discard(Channel):
    """rho -> partial trace keeping only the listed subsystems."""

    keep: frozenset[int]

    def __post_init__(self):
        keep = frozenset(int(k) for k in self.keep)
        if not keep:
            raise ValueError("Discard must keep at least one subsystem")
        if any(k < 0 for k in keep):
            raise ValueError("keep indices must be nonnegative")
        object.__setattr__(self, "keep", keep)

    def output_dims(self, dims):
        dims = tuple(dims)
        bad = [k for k in self.keep if k >= len(dims)]
        if bad:
            raise DimensionMismatchError(f"keep indices {sorted(bad)} out of range for dims {dims}")
        return tuple(dims[k] for k in sorted(self.keep))

    def apply(self, rho):
        self.output_dims(rho.dims)
        return DensityOperator(partial_trace(rho.op, self.keep))


@dataclass(frozen=True)
class Kraus(Channel):
    """rho -> sum_k K_k rho K_k† with sum_k K_k†K_k = I."""

    operators: tuple[ComplexOperator, ...]

    def __post_init__(self):
        ops = tuple(self.operators)
        if not ops:
            raise ValueError("Kraus channel needs at least one operator")
        dims0 = ops[0].dims
        for op in ops[1:]:
            if op.dims != dims0:
                raise DimensionMismatchError("all Kraus operators must share dims")
        total = sum(op.matrix.conj().T @ op.matrix for op in ops)
        deviation = float(np.max(np.abs(total - np.eye(ops[0].dim))))
        if deviation > KRAUS_TOL:
            raise ValueError(f"Kraus completeness violated: max |sum K†K - I| = {deviation:.3e}")
        object.__setattr__(self, "operators", ops)

    @property
    def input_dims(self):
        return self.operators[0].dims

    def output_dims(self, dims):
        if tuple(dims) != self.operators[0].dims:
            raise DimensionMismatchError(
                f"Kraus channel acts on dims {self.operators[0].dims}, got {tuple(dims)}"
            )
        return self.operators[0].dims

    def apply(self, rho):
        self.output_dims(rho.dims)
        mat = sum(op.matrix @ rho.matrix @ op.matrix.conj().T for op in self.operators)
        return DensityOperator(ComplexOperator(rho.dims, mat))


@dataclass(frozen=True)
class ClassicalStochastic(Channel):
    """Column-stochastic matrix acting on the diagonal of a diagonal state.

    Models classical (perfectly distinguishable) dynamics inside the same
    data model: the input must be diagonal within DIAGONAL_TOL.
    """

    matrix: np.ndarray

    def __post_init__(self):
        mat = np.array(self.matrix, dtype=float)
        if mat.ndim != 2:
            raise ValueError("stochastic matrix must be two-dimensional")
        if np.any(mat < 0.0) or not np.all(np.isfinite(mat)):
            raise ValueError("stochastic matrix entries must be finite and >= 0")
        col_sums = mat.sum(axis=0)
        if np.max(np.abs(col_sums - 1.0)) > STOCHASTIC_TOL:
            raise ValueError(f"columns must sum to 1 within {STOCHASTIC_TOL:.0e}, got {col_sums}")
        mat.setflags(write=False)
        object.__setattr__(self, "matrix", mat)

    def output_dims(self, dims):
        dims = tuple(dims)
        m, n = self.matrix.shape
        if prod(dims) != n:
            raise DimensionMismatchError(
                f"stochastic matrix has {n} columns but input dims {dims} give dimension {prod(dims)}"
            )
        return dims if m == n else (m,)

    def apply(self, rho):
        out_dims = self.output_dims(rho.dims)
        off_diagonal = rho.matrix - np.diag(rho.matrix.diagonal())
        deviation = float(np.max(np.abs(off_diagonal)))
        if deviation > DIAGONAL_TOL:
            raise ValueError(
                f"classical stochastic channel needs a diagonal state, max off-diagonal {deviation:.3e}"
            )
        probabilities = rho.matrix.diagonal().real
        return DensityOperator(
            ComplexOperator(out_dims, np.diag(self.matrix @ probabilities).astype(complex))
        )


@dataclass(frozen=True)
class Sequence(Channel):
    """Left-to-right composition; adjacent dims are checked eagerly."""

    channels: tuple[Channel, ...]

    def __post_init__(self):
        chain = tuple(self.channels)
        if not chain:
            raise ValueError("Sequence needs at least one channel")
        object.__setattr__(self, "channels", chain)
        # Propagate dims through the chain as far as they are determined;
        # channels with polymorphic input defer the rest to apply time.
        dims = None
        for i, ch in enumerate(chain):
            fixed = ch.input_dims
            if dims is None:
                dims = fixed
            elif fixed is not None and fixed != dims:
                raise DimensionMismatchError(
                    f"channel {i} expects dims {fixed} but receives {dims}"
                )
            if dims is not None:
                dims = ch.output_dims(dims)

    @property
    def input_dims(self):
        return self.channels[0].input_dims

    def output_dims(self, dims):
        dims = tuple(dims)
        for ch in self.channels:
            dims = ch.output_dims(dims)
        return dims

    def apply(self, rho):
        for ch in self.channels:
            rho = ch.apply(rho)
        return rho


def apply_to_ensemble(ch: Channel, e: Ensemble) -> Ensemble:
    """Member-wise application {p_i, rho_i} -> {p_i, ch(rho_i)}."""
    return Ensemble(tuple((p, ch.apply(rho)) for p, rho in e.members))


def check_mixing_linearity(ch: Channel, e: Ensemble) -> float:
    """Max-entry modulus of ch(sum_i p_i rho_i) - sum_i p_i ch(rho_i).

    Every supported channel is linear over stochastic mixtures, so this
    residual is pure floating-point noise (well below 1e-12).
    """
    mixed_first = ch.apply(average_state(e)).matrix
    applied_first = sum(p * ch.apply(rho).matrix for p, rho in e.members)
    return float(np.max(np.abs(mixed_first - applied_first)))
