"""Independent reference computations used only by the tests.

Nothing here imports the package; each routine follows the textbook
definition with explicit loops so it cannot share a bug with the code under
test.
"""

import math

import numpy as np


def kron_loops(a, b):
    a, b = np.asarray(a, dtype=complex), np.asarray(b, dtype=complex)
    ra, ca = a.shape
    rb, cb = b.shape
    out = np.zeros((ra * rb, ca * cb), dtype=complex)
    for i in range(ra):
        for j in range(ca):
            for k in range(rb):
                for l in range(cb):
                    out[i * rb + k, j * cb + l] = a[i, j] * b[k, l]
    return out


def partial_trace_loops(m, d_a, d_b, keep):
    m = np.asarray(m, dtype=complex)
    if keep == "A":
        out = np.zeros((d_a, d_a), dtype=complex)
        for a1 in range(d_a):
            for a2 in range(d_a):
                out[a1, a2] = sum(m[a1 * d_b + b, a2 * d_b + b] for b in range(d_b))
    else:
        out = np.zeros((d_b, d_b), dtype=complex)
        for b1 in range(d_b):
            for b2 in range(d_b):
                out[b1, b2] = sum(m[a * d_b + b1, a * d_b + b2] for a in range(d_a))
    return out


def partial_transpose_loops(m, d_a, d_b, on):
    m = np.asarray(m, dtype=complex)
    out = np.zeros_like(m)
    for a1 in range(d_a):
        for b1 in range(d_b):
            for a2 in range(d_a):
                for b2 in range(d_b):
                    if on == "B":
                        out[a1 * d_b + b1, a2 * d_b + b2] = m[a1 * d_b + b2, a2 * d_b + b1]
                    else:
                        out[a1 * d_b + b1, a2 * d_b + b2] = m[a2 * d_b + b1, a1 * d_b + b2]
    return out


def tsallis_loops(weights, q):
    """Tsallis entropy with an explicit sum; q == 1 handled by the Shannon sum."""
    if q == 1:
        return -sum(w * math.log(w) for w in weights if w > 0)
    return (sum(w ** q for w in weights if w > 0) - 1.0) / (1.0 - q)


def escort_weighted_conditional(table, q):
    """S_q(B|A) as the escort average of per-row conditional Tsallis entropies."""
    table = np.asarray(table, dtype=float)
    num = 0.0
    den = 0.0
    for row in table:
        p_i = float(sum(row))
        if p_i <= 0:
            continue
        cond = [p / p_i for p in row]
        weight = p_i ** q
        num += weight * tsallis_loops(cond, q)
        den += weight
    return num / den


def werner_spectrum(x):
    return [(1 - x) / 4] * 3 + [(1 + 3 * x) / 4]


def werner_pt_spectrum(x):
    return [(1 + x) / 4] * 3 + [(1 - 3 * x) / 4]


def werner_closed_form_direct(x, q):
    """S_q(B|A) of the Werner state from its spectrum and the I/2 marginal."""
    s_ab = tsallis_loops(werner_spectrum(x), q)
    s_a = tsallis_loops([0.5, 0.5], q)
    if q == 1:
        return s_ab - s_a
    return (s_ab - s_a) / (1 + (1 - q) * s_a)


def werner_root_scan(q, step=1e-6):
    """First grid point where the Werner conditional entropy turns negative (dense scan)."""
    x = np.arange(0.0, 1.0 + step / 2, step)
    u = (1 - x) / 2
    v = (1 + 3 * x) / 2
    if q == 1:
        with np.errstate(divide="ignore", invalid="ignore"):
            f = -1.5 * np.where(u > 0, u * np.log(u), 0.0) - 0.5 * v * np.log(v)
    else:
        f = (1.5 * u ** q + 0.5 * v ** q - 1) / (1 - q)
    k = int(np.argmax(f < 0))
    return float(x[k - 1]), float(x[k])
