"""Small dense complex linear algebra.

Matrices are plain ``numpy`` arrays of dtype ``complex128``. Bipartite
operators on ``C^{d_A} (x) C^{d_B}`` use the composite index

    i = a * d_B + b

so subsystem A is the slow index. :func:`kron`, :func:`partial_trace` and
:func:`partial_transpose` all follow this convention.
"""

from __future__ import annotations

from typing import Literal, NamedTuple

import numpy as np

from .errors import DimensionMismatch, NoConvergence, NotHermitian, NotSquare

HERMITIAN_TOL = 1e-10
OFF_DIAGONAL_TOL = 1e-14
MAX_SWEEPS = 100

Subsystem = Literal["A", "B"]


class Spectrum(NamedTuple):
    """Eigenvalues in descending order; ``eigenvectors[:, k]`` pairs with ``eigenvalues[k]``."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def as_complex_matrix(m) -> np.ndarray:
    """Coerce ``m`` to a finite 2-D ``complex128`` array (a copy)."""
    arr = np.array(m, dtype=np.complex128)
    if arr.ndim != 2 or arr.shape[0] == 0 or arr.shape[1] == 0:
        raise ValueError(f"expected a non-empty 2-D matrix, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("matrix has non-finite entries")
    return arr


def _check_subsystem(tag: str) -> None:
    if tag not in ("A", "B"):
        raise ValueError(f"subsystem tag must be 'A' or 'B', got {tag!r}")


def _check_bipartite(m: np.ndarray, dims: tuple[int, int]) -> tuple[int, int]:
    d_a, d_b = (int(d) for d in dims)
    if d_a < 1 or d_b < 1:
        raise DimensionMismatch(f"subsystem dimensions must be positive, got {dims}")
    side = d_a * d_b
    if m.shape != (side, side):
        raise DimensionMismatch(
            f"matrix of shape {m.shape} does not act on a {d_a}x{d_b} system"
        )
    return d_a, d_b


def _off_norm(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.sqrt(np.sum(off.real**2 + off.imag**2)))


def hermitian_eigen(m) -> Spectrum:
    """Diagonalize a Hermitian matrix with cyclic complex Jacobi rotations.

    Each rotation first removes the phase of the pivot ``a[p, q]`` and then
    applies the real symmetric Jacobi rotation, so the update is the unitary
    ``U = diag(1, e^{-i phi}) R(theta)`` on the ``(p, q)`` plane.

    Raises:
        NotSquare: ``m`` is not square.
        NotHermitian: ``max|m - m^H| > 1e-10``.
        NoConvergence: the off-diagonal norm is still above threshold after
            ``MAX_SWEEPS`` sweeps.
    """
    a = as_complex_matrix(m)
    n, cols = a.shape
    if n != cols:
        raise NotSquare(f"matrix of shape {a.shape} is not square")
    asym = float(np.max(np.abs(a - a.conj().T)))
    if asym > HERMITIAN_TOL:
        raise NotHermitian(f"max |m - m^H| = {asym:.3e} exceeds {HERMITIAN_TOL:g}")

    # exact Hermitian working copy; the check above bounds what this discards
    a = 0.5 * (a + a.conj().T)
    v = np.eye(n, dtype=np.complex128)
    threshold = OFF_DIAGONAL_TOL * max(1.0, float(np.linalg.norm(a)))

    for _ in range(MAX_SWEEPS):
        if _off_norm(a) <= threshold:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                mag = abs(apq)
                if mag == 0.0:
                    continue
                app = a[p, p].real
                aqq = a[q, q].real
                phase = apq / mag
                theta = (aqq - app) / (2.0 * mag)
                t = 1.0 / (abs(theta) + np.sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                rot = np.array(
                    [[c, s], [-s * np.conj(phase), c * np.conj(phase)]],
                    dtype=np.complex128,
                )
                idx = [p, q]
                a[:, idx] = a[:, idx] @ rot
                a[idx, :] = rot.conj().T @ a[idx, :]
                a[p, q] = a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
                v[:, idx] = v[:, idx] @ rot
    else:
        if _off_norm(a) > threshold:
            raise NoConvergence(
                f"Jacobi iteration did not converge in {MAX_SWEEPS} sweeps"
            )

    w = np.diag(a).real.copy()
    order = np.argsort(-w, kind="stable")
    return Spectrum(w[order], v[:, order])


def eigvalsh(m) -> np.ndarray:
    """Descending eigenvalues of a Hermitian matrix."""
    return hermitian_eigen(m).eigenvalues


def kron(a, b) -> np.ndarray:
    """Kronecker product; block ``(i, j)`` of the result is ``a[i, j] * b``."""
    return np.kron(as_complex_matrix(a), as_complex_matrix(b))


def partial_trace(m, dims: tuple[int, int], keep: Subsystem) -> np.ndarray:
    """Trace out one factor of a bipartite operator, keeping subsystem ``keep``."""
    _check_subsystem(keep)
    arr = as_complex_matrix(m)
    d_a, d_b = _check_bipartite(arr, dims)
    t = arr.reshape(d_a, d_b, d_a, d_b)
    if keep == "A":
        return np.einsum("ibjb->ij", t)
    return np.einsum("aiaj->ij", t)


def partial_transpose(m, dims: tuple[int, int], on: Subsystem = "B") -> np.ndarray:
    """Transpose the indices of subsystem ``on`` only. Applying it twice is the identity."""
    _check_subsystem(on)
    arr = as_complex_matrix(m)
    d_a, d_b = _check_bipartite(arr, dims)
    t = arr.reshape(d_a, d_b, d_a, d_b)
    if on == "B":
        t = t.transpose(0, 3, 2, 1)
    else:
        t = t.transpose(2, 1, 0, 3)
    return np.ascontiguousarray(t).reshape(d_a * d_b, d_a * d_b)
