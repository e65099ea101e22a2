"""Independent brute-force eigensolver used as ground truth.

The oracle diagonalizes the dense symmetric matrix by cyclic plane
rotations and deliberately shares no logic with the counting machinery:
no node counts, no Sturm chains, no inertia of shifted factorizations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import MarginViolation, NoConvergence
from .jacobi import JacobiMatrix

OFFDIAG_TOL = 1e-14
MAX_SWEEPS = 100


@dataclass(frozen=True)
class SpectrumReport:
    """Sorted eigenvalues with method metadata."""

    eigenvalues: tuple
    method: str
    max_offdiag_residual: float


def dense(h: JacobiMatrix) -> np.ndarray:
    """Dense float64 matrix of H."""
    d = h.dim
    m = np.zeros((d, d))
    for i in range(d):
        m[i, i] = float(h.b[i])
        if i + 1 < d:
            m[i, i + 1] = m[i + 1, i] = float(h.a[i])
    return m


def _offdiag_norm(m: np.ndarray) -> float:
    off = m - np.diag(np.diag(m))
    return math.sqrt(np.sum(off * off))


def eigenvalues_dense(h: JacobiMatrix) -> SpectrumReport:
    """Full spectrum via cyclic plane-rotation (Jacobi) diagonalization.

    Sweeps until the off-diagonal Frobenius mass drops below
    1e-14 * ||H||_F, capped at 100 sweeps.
    """
    m = dense(h)
    d = m.shape[0]
    if d == 1:
        return SpectrumReport((float(m[0, 0]),), "cyclic-plane-rotations", 0.0)

    norm = math.sqrt(np.sum(m * m))
    threshold = OFFDIAG_TOL * norm
    off = _offdiag_norm(m)
    for _ in range(MAX_SWEEPS):
        if off <= threshold:
            break
        for p in range(d - 1):
            for q in range(p + 1, d):
                apq = float(m[p, q])
                if apq == 0.0:
                    continue
                # rotation annihilating m[p, q]
                tau = (float(m[q, q]) - float(m[p, p])) / (2.0 * apq)
                if abs(tau) > 1e150:  # tau*tau would overflow; use the limit
                    t = 0.5 / tau
                elif tau >= 0.0:
                    t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                rp, rq = m[p, :].copy(), m[q, :].copy()
                m[p, :] = c * rp - s * rq
                m[q, :] = s * rp + c * rq
                cp, cq = m[:, p].copy(), m[:, q].copy()
                m[:, p] = c * cp - s * cq
                m[:, q] = s * cp + c * cq
                m[p, q] = m[q, p] = 0.0
        off = _offdiag_norm(m)
    else:
        raise NoConvergence(f"off-diagonal mass {off} after {MAX_SWEEPS} sweeps")

    eigs = tuple(sorted(float(x) for x in np.diag(m)))
    return SpectrumReport(eigs, "cyclic-plane-rotations", off)


def count_below_oracle(
    s: SpectrumReport, lam: float, strict: bool = True, margin: float = 0.0
) -> int:
    """Number of eigenvalues < lambda (strict) or <= lambda (non-strict).

    Raises MarginViolation when any eigenvalue lies within ``margin`` of
    lambda, where the float comparison would be unreliable.
    """
    if margin < 0:
        raise ValueError("margin must be >= 0")
    for e in s.eigenvalues:
        if abs(e - lam) < margin:
            raise MarginViolation(f"eigenvalue {e} within {margin} of {lam}")
    if strict:
        return sum(1 for e in s.eigenvalues if e < lam)
    return sum(1 for e in s.eigenvalues if e <= lam)


def free_matrix_spectrum(N: int) -> list:
    """Closed-form spectrum {-2 cos(k pi / N): k = 1..N-1} of the free matrix."""
    if N < 2:
        raise ValueError("N must be >= 2")
    return [-2.0 * math.cos(math.pi * k / N) for k in range(1, N)]
