"""Dense complex linear algebra over small composite Hilbert spaces.

Every operator carries the ordered list of subsystem dimensions it acts on,
and every structural operation (tensor products, partial traces) validates
that bookkeeping.  Spaces stay desk-scale (total dimension well under a few
hundred), so everything is dense row-major numpy.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

import numpy as np

HERMITICITY_TOL = 1e-10
ORTHONORMALITY_TOL = 1e-10
TRACE_TOL = 1e-12


class DimensionMismatchError(ValueError):
    """Subsystem dimension metadata of two objects does not line up."""


def _as_dims(dims) -> tuple[int, ...]:
    try:
        out = tuple(int(d) for d in dims)
    except TypeError:
        raise ValueError(f"dims must be an iterable of integers, got {dims!r}") from None
    if not out or any(d < 1 for d in out):
        raise ValueError(f"subsystem dimensions must be a nonempty list of integers >= 1, got {out}")
    return out


@dataclass(frozen=True)
class ComplexOperator:
    """Square complex matrix over a composite space with recorded subsystem dims.

    Invariants enforced at construction: the matrix is D x D with
    D = prod(dims), and all entries are finite.
    """

    dims: tuple[int, ...]
    matrix: np.ndarray

    def __post_init__(self):
        dims = _as_dims(self.dims)
        mat = np.array(self.matrix, dtype=complex)
        d = prod(dims)
        if mat.shape != (d, d):
            raise ValueError(
                f"matrix shape {mat.shape} does not match total dimension {d} of dims {dims}"
            )
        if not np.all(np.isfinite(mat)):
            raise ValueError("operator entries must be finite (no NaN/Inf)")
        mat.setflags(write=False)
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "matrix", mat)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def dagger(self) -> "ComplexOperator":
        return ComplexOperator(self.dims, self.matrix.conj().T)

    def trace(self) -> complex:
        return complex(np.trace(self.matrix))


@dataclass(frozen=True)
class EigenSystem:
    """Hermitian eigendecomposition: ascending eigenvalues, orthonormal columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def __post_init__(self):
        vals = np.array(self.eigenvalues, dtype=float)
        vecs = np.array(self.eigenvectors, dtype=complex)
        if vals.ndim != 1 or vecs.shape != (vals.size, vals.size):
            raise ValueError("eigenvalues must be a vector matching square eigenvector columns")
        if np.any(np.diff(vals) < 0):
            raise ValueError("eigenvalues must be ascending")
        gram = vecs.conj().T @ vecs
        if np.max(np.abs(gram - np.eye(vals.size))) > ORTHONORMALITY_TOL:
            raise ValueError("eigenvector columns must be orthonormal")
        vals.setflags(write=False)
        vecs.setflags(write=False)
        object.__setattr__(self, "eigenvalues", vals)
        object.__setattr__(self, "eigenvectors", vecs)

    def reconstruct(self) -> np.ndarray:
        return (self.eigenvectors * self.eigenvalues) @ self.eigenvectors.conj().T


def identity(dims) -> ComplexOperator:
    dims = _as_dims(dims)
    return ComplexOperator(dims, np.eye(prod(dims), dtype=complex))


def tensor_product(a: ComplexOperator, b: ComplexOperator) -> ComplexOperator:
    """Kronecker product; the left factor indexes the slower-varying block."""
    return ComplexOperator(a.dims + b.dims, np.kron(a.matrix, b.matrix))


def partial_trace(a: ComplexOperator, keep) -> ComplexOperator:
    """Trace out every subsystem not listed in ``keep``.

    ``keep`` is a set of subsystem indices into ``a.dims``; the result keeps
    those subsystems in their original order and preserves the trace.
    """
    kept = sorted(set(int(k) for k in keep))
    if not kept:
        raise ValueError("keep set must not be empty")
    n = len(a.dims)
    bad = [k for k in kept if k < 0 or k >= n]
    if bad:
        raise ValueError(f"keep indices {bad} out of range for {n} subsystems")

    reshaped = a.matrix.reshape(a.dims + a.dims)
    row_axes = n
    for idx in sorted(set(range(n)) - set(kept), reverse=True):
        reshaped = np.trace(reshaped, axis1=idx, axis2=idx + row_axes)
        row_axes -= 1
    out_dims = tuple(a.dims[k] for k in kept)
    d = prod(out_dims)
    return ComplexOperator(out_dims, reshaped.reshape(d, d))


def hermitian_eigensystem(a: ComplexOperator) -> EigenSystem:
    """Eigendecomposition of a Hermitian operator.

    Inputs within HERMITICITY_TOL of Hermitian (max-entry modulus of a - a†)
    are symmetrized before decomposition; anything farther is an error.
    """
    deviation = float(np.max(np.abs(a.matrix - a.matrix.conj().T)))
    if deviation > HERMITICITY_TOL:
        raise ValueError(
            f"operator is not Hermitian: max |a - a†| = {deviation:.3e} exceeds {HERMITICITY_TOL:.0e}"
        )
    symmetric = (a.matrix + a.matrix.conj().T) / 2
    vals, vecs = np.linalg.eigh(symmetric)
    return EigenSystem(vals.real, vecs)


def outer(psi) -> ComplexOperator:
    """Rank-1 projector |psi><psi| of a normalized pure state.

    Accepts any object with ``amplitudes`` and ``dims`` attributes.
    """
    amp = np.asarray(psi.amplitudes, dtype=complex)
    norm = float(np.linalg.norm(amp))
    if abs(norm - 1.0) > 1e-9:
        raise ValueError(f"state must be normalized, got norm {norm!r}")
    return ComplexOperator(psi.dims, np.outer(amp, amp.conj()))
