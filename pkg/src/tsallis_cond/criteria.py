"""Entropic separability tests and the two-qubit Werner benchmark.

The Werner family is ``(1 - x)/4 * I (x) I + x |Psi-><Psi-|`` with the singlet
``|Psi-> = (|01> - |10>)/sqrt(2)``. Its nonadditive conditional entropy has
the closed form

    S_q(B|A) = [ 3/2 u**q + 1/2 v**q - 1 ] / (1 - q),
    u = (1 - x)/2,  v = (1 + 3x)/2,

which decreases monotonically in ``x``. The zero crossing ``x*(q)`` falls
from about 0.7476 at ``q = 1`` towards the partial-transpose bound 1/3 as
``q`` grows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from . import matcore
from .classical import QIndex, QLike, as_qindex
from .errors import InvalidAlpha, NoConvergence, NotBipartite, OutOfRange, RootBracketFailure
from .quantum import DensityMatrix, as_density_matrix, quantum_conditional_tsallis

SLACK = 1e-10

# published Werner-state thresholds on x
BELL_THRESHOLD = 1.0 / math.sqrt(2.0)
RENYI2_THRESHOLD = 1.0 / math.sqrt(3.0)
PPT_THRESHOLD = 1.0 / 3.0

BISECT_LO = 1e-9
BISECT_HI = 1.0 - 1e-9
BISECT_XTOL = 1e-10
BISECT_MAX_ITER = 200


def _check_x(x: float) -> float:
    x = float(x)
    if not (0.0 <= x <= 1.0):
        raise OutOfRange(f"Werner parameter x must lie in [0, 1], got {x!r}")
    return x


def singlet_projector() -> np.ndarray:
    m = np.zeros((4, 4), dtype=np.complex128)
    m[1, 1] = m[2, 2] = 0.5
    m[1, 2] = m[2, 1] = -0.5
    return m


def werner_state(x: float) -> DensityMatrix:
    x = _check_x(x)
    m = (1.0 - x) / 4.0 * np.eye(4, dtype=np.complex128) + x * singlet_projector()
    return DensityMatrix(m, (2, 2))


def _pow(base: float, q: float) -> float:
    # log-space; base <= 0 is an exact zero
    if base <= 0.0:
        return 0.0
    try:
        return math.exp(q * math.log(base))
    except OverflowError:
        return math.inf


def _xlogx(y: float) -> float:
    return y * math.log(y) if y > 0.0 else 0.0


def werner_conditional_closed_form(x: float, q: QLike) -> float:
    """Closed-form ``S_q(B|A)`` (equal to ``S_q(A|B)``) of the Werner state."""
    x = _check_x(x)
    qi = as_qindex(q)
    u = (1.0 - x) / 2.0
    v = (1.0 + 3.0 * x) / 2.0
    if qi.is_limit_one:
        return -1.5 * _xlogx(u) - 0.5 * _xlogx(v) + 0.0
    total = 1.5 * _pow(u, qi.q) + 0.5 * _pow(v, qi.q)
    return (total - 1.0) / (1.0 - qi.q) + 0.0


class PPTResult(NamedTuple):
    separable: bool
    min_eigenvalue: float


def ppt_test(rho: DensityMatrix) -> PPTResult:
    """Peres partial-transpose test.

    ``separable`` is True when the partial transpose has no eigenvalue below
    ``-1e-10``. For 2x2 and 2x3 systems that is equivalent to separability;
    in larger dimensions it is only necessary (see :func:`ppt_is_conclusive`).
    """
    rho = as_density_matrix(rho)
    if not rho.is_bipartite:
        raise NotBipartite(f"need d_A, d_B >= 2, got dims {rho.dims}")
    pt = matcore.partial_transpose(rho.mat, rho.dims, "B")
    lam_min = float(matcore.eigvalsh(pt)[-1])
    return PPTResult(lam_min >= -SLACK, lam_min)


def ppt_is_conclusive(dims: tuple[int, int]) -> bool:
    return dims[0] * dims[1] <= 6


def renyi_entropy(rho, alpha: float) -> float:
    """``ln(Tr rho**alpha) / (1 - alpha)`` for ``alpha > 0``, ``alpha != 1``."""
    alpha = float(alpha)
    if not np.isfinite(alpha) or alpha <= 0.0 or abs(alpha - 1.0) < 1e-9:
        raise InvalidAlpha(f"alpha must be positive, finite and != 1, got {alpha!r}")
    lam = as_density_matrix(rho).eigenvalues
    lam = lam[lam > 0.0]
    return math.log(float(np.sum(lam**alpha))) / (1.0 - alpha) + 0.0


def alpha_entropic_criterion(rho: DensityMatrix, alpha: float = 2.0) -> bool:
    """``S_alpha(A,B) >= max(S_alpha(A), S_alpha(B))``; False certifies entanglement."""
    rho = as_density_matrix(rho)
    if not rho.is_bipartite:
        raise NotBipartite(f"need d_A, d_B >= 2, got dims {rho.dims}")
    s_ab = renyi_entropy(rho, alpha)
    s_a = renyi_entropy(rho.marginal("A"), alpha)
    s_b = renyi_entropy(rho.marginal("B"), alpha)
    return s_ab >= max(s_a, s_b) - SLACK


@dataclass(frozen=True)
class CriterionReport:
    q: QIndex
    s_cond_BA: float
    s_cond_AB: float
    entropic_separable_hint: bool
    renyi2_hint: bool
    ppt_verdict: bool
    ppt_min_eigenvalue: float


def entropic_criterion(rho: DensityMatrix, q: QLike) -> CriterionReport:
    """Evaluate ``S_q(B|A) >= 0`` and ``S_q(A|B) >= 0`` together with the reference tests.

    A False ``entropic_separable_hint`` proves the state is entangled; True
    proves nothing. The Renyi (alpha = 2) and partial-transpose verdicts are
    filled in alongside for comparison.
    """
    rho = as_density_matrix(rho)
    qi = as_qindex(q)
    s_ba = quantum_conditional_tsallis(rho, "A", qi)
    s_ab = quantum_conditional_tsallis(rho, "B", qi)
    ppt = ppt_test(rho)
    return CriterionReport(
        q=qi,
        s_cond_BA=s_ba,
        s_cond_AB=s_ab,
        entropic_separable_hint=bool(s_ba >= -SLACK and s_ab >= -SLACK),
        renyi2_hint=alpha_entropic_criterion(rho, 2.0),
        ppt_verdict=ppt.separable,
        ppt_min_eigenvalue=ppt.min_eigenvalue,
    )


def _bisect_decreasing(f, lo: float, hi: float) -> float:
    f_lo, f_hi = f(lo), f(hi)
    if not (f_lo > 0.0 and f_hi < 0.0):
        raise RootBracketFailure(
            f"no sign change on [{lo:g}, {hi:g}]: f(lo) = {f_lo!r}, f(hi) = {f_hi!r}"
        )
    for _ in range(BISECT_MAX_ITER):
        if hi - lo <= BISECT_XTOL:
            return 0.5 * (lo + hi)
        mid = 0.5 * (lo + hi)
        f_mid = f(mid)
        if f_mid > 0.0:
            lo = mid
        elif f_mid < 0.0:
            hi = mid
        else:
            return mid
    raise NoConvergence(f"bisection did not reach {BISECT_XTOL:g} in {BISECT_MAX_ITER} steps")


def werner_threshold(q: QLike) -> float:
    """The ``x`` at which the Werner conditional entropy crosses zero."""
    qi = as_qindex(q)
    return _bisect_decreasing(lambda x: werner_conditional_closed_form(x, qi), BISECT_LO, BISECT_HI)


class ThresholdPoint(NamedTuple):
    q: float
    x_star: float


def threshold_curve(q_grid: Sequence[float]) -> list[ThresholdPoint]:
    """``x*(q)`` for each grid value; the grid must be strictly increasing and positive."""
    grid = [float(q) for q in q_grid]
    if any(q <= 0.0 for q in grid):
        raise OutOfRange("q grid values must be positive")
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise OutOfRange("q grid must be strictly increasing")
    return [ThresholdPoint(q, werner_threshold(q)) for q in grid]


def figure_grid(q_min: float = 0.1, q_max: float = 1000.0, points: int = 120, markers: bool = True) -> list[float]:
    """Geometric q grid, optionally with the exact values 1 and 2 merged in when in range."""
    if points == 1:
        if q_min != q_max or q_min <= 0.0:
            raise OutOfRange("a single-point grid needs q_min == q_max > 0")
        grid = [float(q_min)]
    else:
        if not (0.0 < q_min < q_max) or points < 2:
            raise OutOfRange("need 0 < q_min < q_max and points >= 2")
        grid = [float(q) for q in np.geomspace(q_min, q_max, points)]
    if markers:
        grid += [m for m in (1.0, 2.0) if grid[0] <= m <= grid[-1]]
    return sorted(set(grid))


def asymptotic_threshold_check(q_large: float, tol: float) -> bool:
    """Whether ``x*(q_large)`` lies within ``tol`` of the partial-transpose bound 1/3."""
    return abs(werner_threshold(q_large) - PPT_THRESHOLD) <= tol
