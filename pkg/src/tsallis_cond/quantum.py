"""Density matrices and their Tsallis / von Neumann entropies.

All entropies are evaluated from eigenvalue spectra. Eigenvalues in
``[-1e-10, 1e-14]`` are treated as exact zeros; anything more negative means
the input is not a density matrix. The positive side of the window absorbs
eigensolver rounding, which ``lambda**q`` would otherwise amplify to
``~1e-5`` for small ``q``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import matcore
from .classical import (
    QLike,
    as_qindex,
    chain_rule,
    conditional_from_weights,
    prob_vector,
    tsallis_from_probs,
)
from .errors import DimensionMismatch, NotBipartite, NotDensityMatrix, NotHermitian, NotNormalized
from .matcore import Subsystem

TRACE_TOL = 1e-10
PSD_TOL = 1e-10
ZERO_EIGENVALUE = 1e-14
NORM_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """A validated density matrix on ``C^{d_A} (x) C^{d_B}``.

    ``dims = (d, 1)`` marks a single-system state. Construction checks shape,
    Hermiticity, unit trace and positivity and raises :class:`NotDensityMatrix`
    naming the failed invariant. The spectrum computed during validation is
    kept, with numerical zeros set to exactly 0, in :attr:`eigenvalues`.
    """

    mat: np.ndarray
    dims: tuple[int, int]
    eigenvalues: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        try:
            m = matcore.as_complex_matrix(self.mat)
        except ValueError as exc:
            raise NotDensityMatrix("finite-matrix", str(exc)) from None
        dims = tuple(int(d) for d in self.dims)
        if len(dims) != 2 or min(dims) < 1:
            raise NotDensityMatrix("dimensions", f"dims must be two positive integers, got {self.dims}")
        side = dims[0] * dims[1]
        if m.shape != (side, side):
            raise NotDensityMatrix("square", f"shape {m.shape} does not match dims {dims}")
        try:
            w = matcore.eigvalsh(m)
        except NotHermitian as exc:
            raise NotDensityMatrix("Hermitian", str(exc)) from None
        tr = np.trace(m)
        if abs(tr - 1.0) > TRACE_TOL:
            raise NotDensityMatrix("unit-trace", f"trace is {tr.real:.12g}")
        if w[-1] < -PSD_TOL:
            raise NotDensityMatrix("positive-semidefinite", f"eigenvalue {w[-1]:.3e}")
        w = np.where(w <= ZERO_EIGENVALUE, 0.0, w)
        m.setflags(write=False)
        w.setflags(write=False)
        object.__setattr__(self, "mat", m)
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "eigenvalues", w)

    @property
    def is_bipartite(self) -> bool:
        return self.dims[0] >= 2 and self.dims[1] >= 2

    def marginal(self, keep: Subsystem) -> "DensityMatrix":
        """Reduced state of subsystem ``keep`` (the other one is traced out)."""
        reduced = matcore.partial_trace(self.mat, self.dims, keep)
        d = self.dims[0] if keep == "A" else self.dims[1]
        return DensityMatrix(reduced, (d, 1))


def as_density_matrix(rho, dims: tuple[int, int] | None = None) -> DensityMatrix:
    if isinstance(rho, DensityMatrix):
        return rho
    m = np.asarray(rho)
    if dims is None:
        dims = (m.shape[0], 1)
    return DensityMatrix(m, dims)


def from_pure(state, dims: tuple[int, int] | None = None) -> DensityMatrix:
    """Projector ``|psi><psi|`` onto a normalized state vector."""
    psi = np.asarray(state, dtype=np.complex128).ravel()
    norm = float(np.linalg.norm(psi))
    if abs(norm - 1.0) > NORM_TOL:
        raise NotNormalized(f"state vector has norm {norm!r}")
    if dims is None:
        dims = (psi.size, 1)
    return DensityMatrix(np.outer(psi, psi.conj()), dims)


@dataclass(frozen=True)
class SeparableSpec:
    """Convex combination ``sum_k weights[k] * factors[k][0] (x) factors[k][1]``."""

    weights: np.ndarray
    factors: Sequence[tuple[DensityMatrix, DensityMatrix]]


def assemble_separable(spec: SeparableSpec) -> DensityMatrix:
    w = prob_vector(spec.weights)
    if len(spec.factors) != w.size:
        raise DimensionMismatch(f"{w.size} weights but {len(spec.factors)} factor pairs")
    if not spec.factors:
        raise DimensionMismatch("separable decomposition has no terms")
    rho_a0, rho_b0 = spec.factors[0]
    d_a, d_b = rho_a0.mat.shape[0], rho_b0.mat.shape[0]
    total = np.zeros((d_a * d_b, d_a * d_b), dtype=np.complex128)
    for weight, (rho_a, rho_b) in zip(w, spec.factors):
        rho_a, rho_b = as_density_matrix(rho_a), as_density_matrix(rho_b)
        if rho_a.mat.shape[0] != d_a or rho_b.mat.shape[0] != d_b:
            raise DimensionMismatch("factor dimensions differ between terms")
        total += weight * matcore.kron(rho_a.mat, rho_b.mat)
    return DensityMatrix(total, (d_a, d_b))


def von_neumann_entropy(rho) -> float:
    """``-Tr rho ln rho``."""
    return quantum_tsallis(rho, 1.0)


def quantum_tsallis(rho, q: QLike) -> float:
    """``(Tr rho**q - 1) / (1 - q)``, or the von Neumann entropy at ``q = 1``."""
    rho = as_density_matrix(rho)
    return tsallis_from_probs(rho.eigenvalues, as_qindex(q))


def _require_bipartite(rho: DensityMatrix) -> None:
    if not rho.is_bipartite:
        raise NotBipartite(f"need d_A, d_B >= 2, got dims {rho.dims}")


def quantum_conditional_tsallis(rho: DensityMatrix, given: Subsystem = "A", q: QLike = 1.0) -> float:
    """Nonadditive conditional entropy of the complementary subsystem.

    ``given="A"`` gives ``S_q(B|A) = [S_q(A,B) - S_q(A)] / [1 + (1-q) S_q(A)]``.
    Negative values certify entanglement.
    """
    rho = as_density_matrix(rho)
    _require_bipartite(rho)
    qi = as_qindex(q)
    return conditional_from_weights(rho.eigenvalues, rho.marginal(given).eigenvalues, qi)


def quantum_pseudoadditivity_residual(rho: DensityMatrix, q: QLike) -> float:
    """``S_q(A,B) - [S_q(A) + S_q(B|A) + (1-q) S_q(A) S_q(B|A)]`` for a bipartite state."""
    rho = as_density_matrix(rho)
    _require_bipartite(rho)
    qi = as_qindex(q)
    lam_a = rho.marginal("A").eigenvalues
    s_ab = tsallis_from_probs(rho.eigenvalues, qi)
    s_a = tsallis_from_probs(lam_a, qi)
    s_b_given_a = conditional_from_weights(rho.eigenvalues, lam_a, qi)
    return s_ab - chain_rule(s_a, s_b_given_a, qi)
