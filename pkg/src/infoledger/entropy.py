"""Information measures in bits (base-2 logarithms).

The information content of an ensemble is the von Neumann entropy of its
average state.  For pure members this coincides with the Holevo quantity
chi = S(rho_avg) - sum_i p_i S(rho_i), since each member term vanishes.
"""

from __future__ import annotations

import math

import numpy as np

from .linalg import hermitian_eigensystem
from .states import DensityOperator, Ensemble, average_state

EIGENVALUE_CLAMP = 1e-10
BITS_CLAMP = 1e-12


def _as_bits(value: float) -> float:
    # Numerical noise may push a mathematically nonnegative entropy slightly
    # below zero; anything beyond the clamp window signals an upstream bug.
    if value < 0.0:
        if value < -BITS_CLAMP:
            raise ValueError(f"entropy came out negative beyond tolerance: {value!r}")
        return 0.0
    return value


def von_neumann_entropy(rho: DensityOperator) -> float:
    """S(rho) = -sum_i lambda_i log2 lambda_i over the eigenvalues, in bits.

    Eigenvalues in [-1e-10, 0) are treated as zero (PSD drift); more negative
    values are an error.  The 0 * log 0 limit is an explicit zero branch.
    """
    eigenvalues = hermitian_eigensystem(rho.op).eigenvalues
    if eigenvalues[0] < -EIGENVALUE_CLAMP:
        raise ValueError(
            f"density operator has eigenvalue {eigenvalues[0]:.3e} below -{EIGENVALUE_CLAMP:.0e}"
        )
    positive = eigenvalues[eigenvalues > 0.0]
    return _as_bits(float(-(positive * np.log2(positive)).sum()))


def binary_entropy(p: float) -> float:
    """H(p) = -p log2 p - (1-p) log2(1-p); H(0) = H(1) = 0."""
    p = float(p)
    if p < -BITS_CLAMP or p > 1.0 + BITS_CLAMP:
        raise ValueError(f"binary_entropy argument must lie in [0, 1], got {p!r}")
    p = min(max(p, 0.0), 1.0)
    if p == 0.0 or p == 1.0:
        return 0.0
    return _as_bits(-p * math.log2(p) - (1.0 - p) * math.log2(1.0 - p))


def ensemble_information(e: Ensemble) -> float:
    """Information content of an ensemble: entropy of its average state."""
    return von_neumann_entropy(average_state(e))


def two_pure_state_information(c: float) -> float:
    """Information of an equal mixture of two pure states with overlap modulus c.

    The average state has eigenvalues (1 +/- c)/2, so this is H((1+c)/2):
    1 bit for an orthogonal pair, 0 for identical states, strictly
    decreasing in between.
    """
    c = float(c)
    if c < 0.0 or c > 1.0:
        raise ValueError(f"overlap modulus must lie in [0, 1], got {c!r}")
    return binary_entropy((1.0 + c) / 2.0)
