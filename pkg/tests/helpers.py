"""Shared random-object generators for the test suite (all seeded by callers)."""

import numpy as np

from infoledger import ComplexOperator, DensityOperator, Ensemble, PureState, pure_state


def random_unitary_matrix(rng, dim):
    """Haar-distributed unitary via QR of a complex Ginibre matrix."""
    z = (rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    phases = np.diag(r).copy()
    phases /= np.abs(phases)
    return q * phases


def random_density_matrix(rng, dim):
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    rho = g @ g.conj().T
    return rho / np.trace(rho)


def random_density(rng, dims):
    dims = tuple(dims)
    return DensityOperator(ComplexOperator(dims, random_density_matrix(rng, int(np.prod(dims)))))


def random_pure(rng, dims):
    dims = tuple(dims)
    amp = rng.standard_normal(int(np.prod(dims))) + 1j * rng.standard_normal(int(np.prod(dims)))
    return pure_state(amp, dims)


def random_ensemble(rng, dims, members=3):
    weights = rng.random(members) + 0.1
    probs = weights / weights.sum()
    return Ensemble(tuple((float(p), random_density(rng, dims)) for p in probs))


def random_diagonal_ensemble(rng, dims, members=3):
    dims = tuple(dims)
    dim = int(np.prod(dims))
    weights = rng.random(members) + 0.1
    probs = weights / weights.sum()
    pairs = []
    for p in probs:
        diag = rng.random(dim) + 0.05
        diag /= diag.sum()
        pairs.append((float(p), DensityOperator(ComplexOperator(dims, np.diag(diag).astype(complex)))))
    return Ensemble(tuple(pairs))


def pure_pair_with_overlap(c, rng=None, phase=0.0):
    """Two qubit states with |<psi1|psi2>| = c, optionally with a relative phase."""
    psi1 = pure_state([1.0, 0.0])
    psi2 = pure_state([c * np.exp(1j * phase), np.sqrt(max(0.0, 1.0 - c * c))])
    return psi1, psi2
