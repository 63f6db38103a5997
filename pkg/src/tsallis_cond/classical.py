"""Classical Shannon and Tsallis entropies of finite joint distributions.

A joint table ``t`` has shape ``(I, J)`` with ``t[i, j] = p(A=i, B=j)``.
Conventions: ``0 ln 0 = 0`` and ``0**q = 0`` for every ``q > 0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, NamedTuple, Union

import numpy as np

from .errors import DegenerateDenominator, InvalidDistribution, InvalidQ

PROB_TOL = 1e-12
Q_ONE_TOL = 1e-9

Axis = Literal["A", "B"]


@dataclass(frozen=True)
class QIndex:
    """The entropic index ``q > 0``.

    ``is_limit_one`` is set when ``|q - 1| < 1e-9``; every entropy then takes
    its exact Shannon / von Neumann branch instead of the ``(1 - q)**-1`` form.
    """

    q: float

    def __post_init__(self):
        q = float(self.q)
        if not np.isfinite(q) or q <= 0.0:
            raise InvalidQ(f"q must be a finite positive real, got {self.q!r}")
        object.__setattr__(self, "q", q)

    @property
    def is_limit_one(self) -> bool:
        return abs(self.q - 1.0) < Q_ONE_TOL


QLike = Union[QIndex, float, int]


def as_qindex(q: QLike) -> QIndex:
    return q if isinstance(q, QIndex) else QIndex(q)


def _validate(p, ndim: int) -> np.ndarray:
    arr = np.array(p, dtype=float)
    if arr.ndim != ndim or arr.size == 0:
        raise InvalidDistribution(f"expected a non-empty {ndim}-D array, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise InvalidDistribution("distribution has non-finite entries")
    if np.any(arr < 0.0) or np.any(arr > 1.0):
        raise InvalidDistribution("entries must lie in [0, 1]")
    total = float(arr.sum())
    if abs(total - 1.0) > PROB_TOL:
        raise InvalidDistribution(f"entries sum to {total!r}, not 1")
    return arr


def prob_vector(p) -> np.ndarray:
    """Validate a probability vector and return it as a float array."""
    return _validate(p, 1)


def joint_table(t) -> np.ndarray:
    """Validate a joint probability table and return it as a float array."""
    return _validate(t, 2)


def _oriented(t, given: Axis) -> np.ndarray:
    """Table with the conditioning variable on axis 0."""
    if given not in ("A", "B"):
        raise ValueError(f"axis must be 'A' or 'B', got {given!r}")
    tab = joint_table(t)
    return tab if given == "A" else tab.T


def marginal(t, over: Axis = "A") -> np.ndarray:
    """Marginal distribution of variable ``over``."""
    tab = joint_table(t)
    if over == "A":
        return tab.sum(axis=1)
    if over == "B":
        return tab.sum(axis=0)
    raise ValueError(f"axis must be 'A' or 'B', got {over!r}")


class ConditionalTable(NamedTuple):
    probs: np.ndarray
    empty_rows: np.ndarray


def conditional_table(t, given: Axis = "A") -> ConditionalTable:
    """Conditional distributions ``p(other | given = i)``, one per row.

    Rows whose conditioning probability is zero have no conditional
    distribution; they come back as all-zero and are flagged in
    ``empty_rows``.
    """
    tab = _oriented(t, given)
    row = tab.sum(axis=1)
    empty = row <= 0.0
    probs = np.zeros_like(tab)
    probs[~empty] = tab[~empty] / row[~empty, None]
    return ConditionalTable(probs, empty)


def power_sum(p: np.ndarray, q: float) -> float:
    """``sum p_i**q`` with ``0**q = 0``."""
    p = np.asarray(p, dtype=float).ravel()
    nz = p[p > 0.0]
    return float(np.sum(nz**q))


def shannon_from_probs(p: np.ndarray) -> float:
    p = np.asarray(p, dtype=float).ravel()
    nz = p[p > 0.0]
    return float(-np.sum(nz * np.log(nz))) + 0.0


def tsallis_from_probs(p: np.ndarray, q: QLike) -> float:
    """Tsallis entropy of already-validated weights (probabilities or eigenvalues)."""
    qi = as_qindex(q)
    if qi.is_limit_one:
        return shannon_from_probs(p)
    return (power_sum(p, qi.q) - 1.0) / (1.0 - qi.q) + 0.0


def shannon_entropy(p) -> float:
    """``-sum p ln p`` of a probability vector or joint table (natural log)."""
    arr = np.asarray(p, dtype=float)
    return shannon_from_probs(_validate(arr, max(arr.ndim, 1)))


def tsallis_entropy(p, q: QLike) -> float:
    """Tsallis entropy ``(sum p**q - 1) / (1 - q)`` of a vector or joint table.

    At ``q = 1`` the Shannon entropy is returned.
    """
    qi = as_qindex(q)
    arr = np.asarray(p, dtype=float)
    return tsallis_from_probs(_validate(arr, max(arr.ndim, 1)), qi)


def escort(p, q: QLike) -> np.ndarray:
    """Escort distribution ``p_i**q / sum_k p_k**q``."""
    qi = as_qindex(q)
    arr = prob_vector(p)
    powered = np.zeros_like(arr)
    nz = arr > 0.0
    powered[nz] = arr[nz] ** qi.q
    return powered / powered.sum()


def conditional_from_weights(joint, given, q: QLike) -> float:
    """Nonadditive conditional entropy from joint and conditioning weights.

    ``joint`` and ``given`` are probabilities (or density-matrix eigenvalues)
    of the composite and of the conditioning part. The ratio
    ``(S_q(joint) - S_q(given)) / (1 + (1 - q) S_q(given))`` is evaluated as
    ``(sum joint**q / sum given**q - 1) / (1 - q)``: the denominator
    ``1 + (1 - q) S_q(given)`` *is* ``sum given**q``, and forming it from the
    entropy cancels catastrophically once it drops below ~1e-12 (large q).
    """
    qi = as_qindex(q)
    if qi.is_limit_one:
        return shannon_from_probs(joint) - shannon_from_probs(given)
    denom = power_sum(given, qi.q)
    if not (np.isfinite(denom) and denom > 0.0):
        raise DegenerateDenominator(f"1 + (1 - q) S_q = {denom!r}")
    return (power_sum(joint, qi.q) / denom - 1.0) / (1.0 - qi.q) + 0.0


def conditional_tsallis(t, given: Axis = "A", q: QLike = 1.0) -> float:
    """Nonadditive conditional entropy of the other variable given ``given``.

    ``conditional_tsallis(t, "A", q)`` is ``S_q(B|A)``. It equals the
    escort-weighted average of the row-wise Tsallis entropies of the
    conditional distributions, and is never negative.
    """
    tab = _oriented(t, given)
    return conditional_from_weights(tab, tab.sum(axis=1), q)


def pseudoadditivity_residual(t, q: QLike) -> float:
    """``S_q(A,B) - [S_q(A) + S_q(B|A) + (1 - q) S_q(A) S_q(B|A)]``.

    Zero up to rounding for every valid table.
    """
    qi = as_qindex(q)
    tab = joint_table(t)
    s_ab = tsallis_from_probs(tab, qi)
    s_a = tsallis_from_probs(tab.sum(axis=1), qi)
    s_b_given_a = conditional_from_weights(tab, tab.sum(axis=1), qi)
    return s_ab - chain_rule(s_a, s_b_given_a, qi)


def chain_rule(s_given: float, s_cond: float, q: QLike) -> float:
    """Joint entropy rebuilt as ``S_q(A) + S_q(B|A) + (1 - q) S_q(A) S_q(B|A)``."""
    qi = as_qindex(q)
    k = 0.0 if qi.is_limit_one else 1.0 - qi.q
    return s_given + s_cond + k * s_given * s_cond
