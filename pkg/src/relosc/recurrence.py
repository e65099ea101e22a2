"""Fundamental solutions of the Jacobi difference equation and Wronskians.

The difference equation is

    a(n) u(n+1) + b(n) u(n) + a(n-1) u(n-1) = z u(n),    n = 1..N,

with the extended boundary coefficients a(0)=a(N-1)=a(N)=-1, b(N)=0.
``solve_minus`` starts from u(0)=0, u(1)=1 and ``solve_plus`` from
u(N)=0, u(N+1)=1; both produce values on the full index range 0..N+1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence, Union

from .errors import IndexOutOfRange, LengthMismatch
from .jacobi import JacobiMatrix
from .numeric import Number, is_exact

# Renormalization threshold for optional float-mode rescaling on long grids.
RENORM_THRESHOLD = 2.0**512


@dataclass(frozen=True)
class SolutionSequence:
    """Values u(0..N+1) of a solution at spectral parameter z."""

    z: Number
    side: str  # "minus" | "plus" | "custom"
    values: tuple
    N: int
    scale_log: float = 0.0  # log of the accumulated positive rescaling

    def value(self, n: int) -> Number:
        if not 0 <= n <= self.N + 1:
            raise IndexOutOfRange(f"u({n}) undefined, domain is 0..{self.N + 1}")
        return self.values[n]


def _coeffs(h: JacobiMatrix, z: Number):
    """Extended coefficients, promoted to Fraction when everything is exact
    so that division stays in the rational field."""
    if h.exact and is_exact(z):
        a = [Fraction(h.extended_a(n)) for n in range(h.N + 1)]
        b = [Fraction(h.extended_b(n)) for n in range(1, h.N + 1)]
        z = Fraction(z)
    else:
        a = [float(h.extended_a(n)) for n in range(h.N + 1)]
        b = [float(h.extended_b(n)) for n in range(1, h.N + 1)]
        z = float(z)
    return a, b, z


def solve_minus(h: JacobiMatrix, z: Number, renormalize: bool = False) -> SolutionSequence:
    """Forward solution with u(0)=0, u(1)=1."""
    a, b, z = _coeffs(h, z)
    u = [0 * z, 1 + 0 * z]
    scale_log = 0.0
    for n in range(1, h.N + 1):
        # b is indexed from 1: b[n-1] = b(n); a[n] = a(n)
        nxt = ((z - b[n - 1]) * u[n] - a[n - 1] * u[n - 1]) / a[n]
        u.append(nxt)
        if renormalize and not is_exact(nxt):
            m = max(abs(u[n]), abs(nxt))
            if m > RENORM_THRESHOLD:
                u[n] /= m
                u[n + 1] /= m
                scale_log += math.log(m)
    return SolutionSequence(z, "minus", tuple(u), h.N, scale_log)


def solve_plus(h: JacobiMatrix, z: Number, renormalize: bool = False) -> SolutionSequence:
    """Backward solution with u(N)=0, u(N+1)=1."""
    a, b, z = _coeffs(h, z)
    u = [0 * z] * h.N + [0 * z, 1 + 0 * z]
    scale_log = 0.0
    for n in range(h.N, 0, -1):
        prv = ((z - b[n - 1]) * u[n] - a[n] * u[n + 1]) / a[n - 1]
        u[n - 1] = prv
        if renormalize and not is_exact(prv):
            m = max(abs(u[n]), abs(prv))
            if m > RENORM_THRESHOLD:
                u[n] /= m
                u[n - 1] /= m
                scale_log += math.log(m)
    return SolutionSequence(z, "plus", tuple(u), h.N, scale_log)


def residuals(h: JacobiMatrix, u: SolutionSequence) -> list:
    """Residual of the difference equation at every n = 1..N."""
    out = []
    for n in range(1, h.N + 1):
        r = (
            h.extended_a(n) * u.values[n + 1]
            + h.extended_b(n) * u.values[n]
            + h.extended_a(n - 1) * u.values[n - 1]
            - u.z * u.values[n]
        )
        out.append(r)
    return out


@dataclass(frozen=True)
class WronskianSequence:
    """W_n(u0, u1) for n = 0..N together with the diagonal difference
    b_diff(n) = b0(n) - b1(n) for n = 1..N of the generating pair."""

    values: tuple
    b_diff: tuple

    @property
    def N(self) -> int:
        return len(self.values) - 1


AProvider = Union[JacobiMatrix, Callable[[int], Number]]


def wronskian_sequence(
    a_provider: AProvider,
    u0: SolutionSequence,
    u1: SolutionSequence,
    b_diff: Sequence[Number],
) -> WronskianSequence:
    """W_n = a(n) (u0(n) u1(n+1) - u0(n+1) u1(n)) for n = 0..N."""
    if u0.N != u1.N:
        raise LengthMismatch(f"solutions disagree on N: {u0.N} vs {u1.N}")
    N = u0.N
    if len(b_diff) != N:
        raise LengthMismatch(f"b_diff must have {N} entries (indices 1..N), got {len(b_diff)}")
    a_of = a_provider.extended_a if isinstance(a_provider, JacobiMatrix) else a_provider
    w = tuple(
        a_of(n) * (u0.values[n] * u1.values[n + 1] - u0.values[n + 1] * u1.values[n])
        for n in range(N + 1)
    )
    return WronskianSequence(w, tuple(b_diff))


def wronskian_pair(
    h0: JacobiMatrix, h1: JacobiMatrix, u0: SolutionSequence, u1: SolutionSequence
) -> WronskianSequence:
    """Wronskian of a solution of H0 at z0 with a solution of H1 at z1.

    The diagonal difference is taken between the shifted operators
    H0 - z0 and H1 - z1, which both solutions solve at spectral parameter
    zero; this is what the weighted-node weights refer to when the two
    spectral parameters differ.  The boundary entry keeps the b(N) = 0
    convention of the shifted problems.
    """
    b_diff = tuple(
        h0.extended_b(n) - h1.extended_b(n) - u0.z + u1.z for n in range(1, h0.N)
    ) + (0 * (u0.z - u1.z),)
    return wronskian_sequence(h0, u0, u1, b_diff)


def check_wronskian_step(
    w: WronskianSequence, u0: SolutionSequence, u1: SolutionSequence
) -> Number:
    """Max residual of W_{n+1} - W_n = b_diff(n+1) u0(n+1) u1(n+1)."""
    if u0.N != w.N or u1.N != w.N:
        raise LengthMismatch("Wronskian and solutions disagree on N")
    worst = 0 * w.values[0]
    for n in range(w.N):
        r = abs(
            w.values[n + 1]
            - w.values[n]
            - w.b_diff[n] * u0.values[n + 1] * u1.values[n + 1]
        )
        if r > worst:
            worst = r
    return worst
