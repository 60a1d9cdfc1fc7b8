"""Numerical search over the unitary group for a scenario's target map.

The full orbit {exp(iH) : H Hermitian} is probed with restarted
derivative-free simplex descent.  For realizable targets (orthogonal
sources, identity) the error drops to numerical zero; for copy and delete
scenarios with overlap strictly between 0 and 1 it bottoms out at a strictly
positive floor.  The floor values are an empirical artifact of this module:
no quantitative bound is claimed, only separation from the realizable case.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import prod

import numpy as np
from scipy.optimize import minimize

from .linalg import ComplexOperator, DimensionMismatchError, _as_dims
from .scenarios import Scenario

UNITARY_TOL = 1e-10
DEFAULT_RESTARTS = 20
DEFAULT_ITERATIONS = 5000
DEFAULT_SEED = 0


@lru_cache(maxsize=None)
def generator_basis(dim: int) -> np.ndarray:
    """Fixed Hermitian generator basis of u(dim), shape (dim^2, dim, dim).

    Ordering: the dim diagonal projectors E_kk first, then for each pair
    j < k (lexicographic) the symmetric generator E_jk + E_kj followed by
    the antisymmetric one -i E_jk + i E_kj.
    """
    if dim < 1:
        raise ValueError(f"dimension must be >= 1, got {dim}")
    gens = np.zeros((dim * dim, dim, dim), dtype=complex)
    idx = 0
    for k in range(dim):
        gens[idx, k, k] = 1.0
        idx += 1
    for j in range(dim):
        for k in range(j + 1, dim):
            gens[idx, j, k] = 1.0
            gens[idx, k, j] = 1.0
            idx += 1
            gens[idx, j, k] = -1.0j
            gens[idx, k, j] = 1.0j
            idx += 1
    gens.setflags(write=False)
    return gens


@dataclass(frozen=True)
class UnitaryParameterization:
    """dim^2 real coefficients of the fixed generator basis."""

    dim: int
    params: np.ndarray

    def __post_init__(self):
        dim = int(self.dim)
        params = np.array(self.params, dtype=float)
        if dim < 1:
            raise ValueError(f"dimension must be >= 1, got {dim}")
        if params.shape != (dim * dim,):
            raise ValueError(
                f"expected {dim * dim} parameters for dimension {dim}, got shape {params.shape}"
            )
        if not np.all(np.isfinite(params)):
            raise ValueError("parameters must be finite")
        params.setflags(write=False)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "params", params)


def _exp_i_hermitian(h: np.ndarray) -> np.ndarray:
    # exp(iH) through the eigendecomposition keeps the result unitary to
    # machine precision for any finite parameter values.
    vals, vecs = np.linalg.eigh(h)
    return (vecs * np.exp(1j * vals)) @ vecs.conj().T


def materialize(p: UnitaryParameterization, dims=None) -> ComplexOperator:
    """U = exp(i sum_a params_a G_a) over the fixed generator basis."""
    h = np.tensordot(p.params, generator_basis(p.dim), axes=1)
    if dims is None:
        dims = (p.dim,)
    dims = _as_dims(dims)
    if prod(dims) != p.dim:
        raise DimensionMismatchError(f"dims {dims} do not match parameterized dimension {p.dim}")
    return ComplexOperator(dims, _exp_i_hermitian(h))


def _branch_vectors(s: Scenario) -> tuple[list[np.ndarray], list[np.ndarray]]:
    # Scenario members are rank-1, so the top eigenvector recovers each pure
    # branch (any global phase is irrelevant to the fidelities below).
    ins, outs = [], []
    for (_, rho_in), (_, rho_out) in zip(s.input_ensemble.members, s.target_ensemble.members):
        ins.append(np.linalg.eigh(rho_in.matrix)[1][:, -1])
        outs.append(np.linalg.eigh(rho_out.matrix)[1][:, -1])
    return ins, outs


def scenario_error(u: ComplexOperator, s: Scenario) -> float:
    """Equal-weight average infidelity over the two scenario branches.

    Returns (1/2) sum_i (1 - |<target_i| U |input_i>|^2), clipped to [0, 1].
    """
    if u.dims != s.input_ensemble.dims:
        raise DimensionMismatchError(
            f"unitary dims {u.dims} do not match the scenario space {s.input_ensemble.dims}"
        )
    ins, outs = _branch_vectors(s)
    total = 0.0
    for vec_in, vec_out in zip(ins, outs):
        total += 1.0 - abs(np.vdot(vec_out, u.matrix @ vec_in)) ** 2
    return min(max(total / 2.0, 0.0), 1.0)


@dataclass(frozen=True)
class SearchResult:
    """Best restart of a seeded search; reproducible bit-for-bit from the seed."""

    best_error: float
    best_params: np.ndarray
    restarts_used: int
    iterations_per_restart: int
    seed: int

    def __post_init__(self):
        params = np.array(self.best_params, dtype=float)
        params.setflags(write=False)
        object.__setattr__(self, "best_params", params)


def minimize_error(
    s: Scenario,
    restarts: int = DEFAULT_RESTARTS,
    iterations: int = DEFAULT_ITERATIONS,
    seed: int = DEFAULT_SEED,
) -> SearchResult:
    """Restarted Nelder-Mead descent of ``scenario_error`` over exp(iH).

    Starting points are drawn from a generator seeded with ``seed``, so
    results are deterministic; restarts are independent and the minimum
    wins, ties going to the lowest restart index.  Non-convergence never
    raises, it just leaves a larger best_error.
    """
    restarts = int(restarts)
    iterations = int(iterations)
    if restarts < 1 or iterations < 1:
        raise ValueError("restarts and iterations must both be >= 1")

    dims = s.input_ensemble.dims
    if s.target_ensemble.dims != dims:
        raise DimensionMismatchError(
            f"input dims {dims} and target dims {s.target_ensemble.dims} differ"
        )
    dim = prod(dims)
    basis = generator_basis(dim)
    ins, outs = _branch_vectors(s)

    def objective(params: np.ndarray) -> float:
        u = _exp_i_hermitian(np.tensordot(params, basis, axes=1))
        total = 0.0
        for vec_in, vec_out in zip(ins, outs):
            total += 1.0 - abs(np.vdot(vec_out, u @ vec_in)) ** 2
        return total / 2.0

    rng = np.random.default_rng(seed)
    n_params = dim * dim
    best_error = np.inf
    best_params = None
    for _ in range(restarts):
        start = rng.uniform(-np.pi, np.pi, n_params)
        result = minimize(
            objective,
            start,
            method="Nelder-Mead",
            options={
                "maxiter": iterations,
                "maxfev": iterations * (n_params + 2),
                "xatol": 1e-12,
                "fatol": 1e-14,
                "adaptive": True,
            },
        )
        if result.fun < best_error:
            best_error = float(result.fun)
            best_params = np.array(result.x, dtype=float)

    return SearchResult(
        best_error=min(max(best_error, 0.0), 1.0),
        best_params=best_params,
        restarts_used=restarts,
        iterations_per_restart=iterations,
        seed=int(seed),
    )
