"""Random distributions and states for property checks.

Every sampler takes an explicit ``numpy.random.Generator`` so runs are
reproducible.
"""

from __future__ import annotations

import numpy as np

from .quantum import DensityMatrix, SeparableSpec, assemble_separable


def dirichlet_flat(rng: np.random.Generator, n: int) -> np.ndarray:
    """Uniform point on the probability simplex (normalized exponential variates)."""
    e = rng.exponential(size=n)
    return e / e.sum()


def random_table(rng: np.random.Generator, shape: tuple[int, int]) -> np.ndarray:
    """Joint table drawn from the flat Dirichlet over all ``I*J`` cells."""
    return dirichlet_flat(rng, shape[0] * shape[1]).reshape(shape)


def random_product_table(rng: np.random.Generator, shape: tuple[int, int]) -> np.ndarray:
    return np.outer(dirichlet_flat(rng, shape[0]), dirichlet_flat(rng, shape[1]))


def random_unitary(rng: np.random.Generator, n: int) -> np.ndarray:
    """Haar-random unitary from the phase-corrected QR of a complex Ginibre matrix."""
    z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2.0)
    qmat, r = np.linalg.qr(z)
    d = np.diag(r)
    return qmat * (d / np.abs(d))


def random_density_matrix(rng: np.random.Generator, dims: tuple[int, int]) -> DensityMatrix:
    """Hilbert-Schmidt random state ``G G^H / Tr(G G^H)``."""
    n = dims[0] * dims[1]
    g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    m = g @ g.conj().T
    m = 0.5 * (m + m.conj().T)
    return DensityMatrix(m / np.trace(m).real, dims)


def _diag_in_basis(u: np.ndarray, probs: np.ndarray) -> DensityMatrix:
    m = (u * probs) @ u.conj().T
    return DensityMatrix(0.5 * (m + m.conj().T), (u.shape[0], 1))


def random_shared_basis_separable(
    rng: np.random.Generator,
    dims: tuple[int, int],
    n_terms: int | None = None,
) -> tuple[SeparableSpec, DensityMatrix]:
    """Separable state whose factors share one orthonormal basis per subsystem.

    Each term is ``sum_a p(a)|a><a| (x) sum_b r(b)|b><b|`` with the bases
    ``{|a>}`` and ``{|b>}`` Haar-random but common to all terms, and
    ``p``, ``r`` and the mixing weights flat-Dirichlet. ``n_terms`` defaults to
    a uniform draw from 1..6.
    """
    d_a, d_b = dims
    if n_terms is None:
        n_terms = int(rng.integers(1, 7))
    u_a = random_unitary(rng, d_a)
    u_b = random_unitary(rng, d_b)
    weights = dirichlet_flat(rng, n_terms)
    factors = [
        (_diag_in_basis(u_a, dirichlet_flat(rng, d_a)), _diag_in_basis(u_b, dirichlet_flat(rng, d_b)))
        for _ in range(n_terms)
    ]
    spec = SeparableSpec(weights, factors)
    return spec, assemble_separable(spec)


def random_general_separable(
    rng: np.random.Generator,
    dims: tuple[int, int],
    n_terms: int | None = None,
) -> tuple[SeparableSpec, DensityMatrix]:
    """Separable state with independent random factors (no shared basis).

    Exploratory: nonnegativity of the conditional entropy is not asserted for
    this family, only recorded.
    """
    d_a, d_b = dims
    if n_terms is None:
        n_terms = int(rng.integers(1, 7))
    weights = dirichlet_flat(rng, n_terms)
    factors = [
        (random_density_matrix(rng, (d_a, 1)), random_density_matrix(rng, (d_b, 1)))
        for _ in range(n_terms)
    ]
    spec = SeparableSpec(weights, factors)
    return spec, assemble_separable(spec)
