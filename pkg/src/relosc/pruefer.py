"""Prüfer angles with ceiling normalization and angle-based count formulas.

A solution u is written u(n) = rho(n) sin(theta(n)),
u(n+1) = rho(n) cos(theta(n)) with rho(n) > 0, and the angle branch is
pinned down by the normalization chain

    ceil(theta(n)/pi) <= ceil(theta(n+1)/pi) <= ceil(theta(n)/pi) + 1.

This module is float-only: angles serve as an independent cross-check of
the exact sign-based counts in :mod:`relosc.oscillation`, never as the
source of truth.  Whenever an angle sits within tolerance of a multiple of
pi, the side is resolved from the sign of the underlying solution value;
if that sign is itself unreliable, ``BranchAmbiguity`` is raised.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import BranchAmbiguity, DegenerateSolution, LengthMismatch
from .numeric import in_tolerance_band, seq_scale, sign
from .recurrence import SolutionSequence

# How close theta/pi must be to an integer before the underlying sign data
# is consulted instead of trusting the float.
ANGLE_TOL = 1e-9


@dataclass(frozen=True)
class PrueferSequence:
    """Normalized angles theta(0..N) and radii rho(0..N) of a solution."""

    theta: tuple
    rho: tuple
    source: SolutionSequence

    @property
    def N(self) -> int:
        return len(self.theta) - 1


@dataclass(frozen=True)
class RelativeAngleSequence:
    """delta(n) = theta_{u1}(n) - theta_{u0}(n) for n = 0..N."""

    delta: tuple
    source0: SolutionSequence
    source1: SolutionSequence

    @property
    def N(self) -> int:
        return len(self.delta) - 1


def _resolve_ceil(theta: float, sin_value, scale: float) -> int:
    """ceil(theta/pi) with boundary cases decided by the sign of the
    quantity proportional to sin(theta)."""
    q = theta / math.pi
    r = round(q)
    near = abs(q - r) <= ANGLE_TOL * max(1.0, abs(q))
    s = sign(sin_value, scale)
    if near:
        if in_tolerance_band(sin_value, scale):
            raise BranchAmbiguity(
                f"theta/pi = {q!r} is on a branch boundary and the sign of "
                f"{sin_value!r} is inside the tolerance band"
            )
        if s == 0:
            return int(r)
        # sin > 0 puts theta in (2j pi, (2j+1) pi): ceil is odd; mirrored for sin < 0.
        if s > 0:
            return int(r) if r % 2 == 1 else int(r) + 1
        return int(r) if r % 2 == 0 else int(r) + 1
    if s == 0:
        raise BranchAmbiguity(
            f"sin-part is exactly zero but theta/pi = {q!r} is not near an integer"
        )
    return math.ceil(q)


def _resolve_floor(theta: float, sin_value, scale: float) -> int:
    q = theta / math.pi
    r = round(q)
    near = abs(q - r) <= ANGLE_TOL * max(1.0, abs(q))
    if near and sign(sin_value, scale) == 0:
        if in_tolerance_band(sin_value, scale):
            raise BranchAmbiguity(f"floor of theta/pi = {q!r} is ambiguous")
        return int(r)
    return _resolve_ceil(theta, sin_value, scale) - 1


def _base_angle(y: float, x: float) -> float:
    """Two-argument arctangent mapped into (-pi, pi]."""
    t = math.atan2(y, x)
    if t <= -math.pi:
        t += 2 * math.pi
    return t


def pruefer_sequence(u: SolutionSequence) -> PrueferSequence:
    """Normalized Prüfer angles of a solution.

    theta(0) is fixed in (-pi, pi] by atan2(u(0), u(1)); each later angle is
    the unique representative satisfying the normalization chain.
    """
    vals = u.values
    fvals = [float(v) for v in vals]
    scale = seq_scale(fvals)
    for n in range(u.N + 1):
        if sign(vals[n], scale) == 0 and sign(vals[n + 1], scale) == 0:
            raise DegenerateSolution(f"u({n}) = u({n + 1}) = 0")

    theta = [_base_angle(fvals[0], fvals[1])]
    ceil_prev = _resolve_ceil(theta[0], vals[0], scale)
    for n in range(1, u.N + 1):
        base = _base_angle(fvals[n], fvals[n + 1])
        k_base = _resolve_ceil(base, vals[n], scale)
        # exactly one of {ceil_prev, ceil_prev+1} has the parity of k_base
        target = ceil_prev if (ceil_prev - k_base) % 2 == 0 else ceil_prev + 1
        theta.append(base + math.pi * (target - k_base))
        ceil_prev = target
    rho = tuple(math.hypot(fvals[n], fvals[n + 1]) for n in range(u.N + 1))
    return PrueferSequence(tuple(theta), rho, u)


def theta_ceils(p: PrueferSequence) -> tuple:
    """Resolved ceil(theta(n)/pi) for n = 0..N."""
    scale = seq_scale(p.source.values)
    return tuple(
        _resolve_ceil(p.theta[n], p.source.values[n], scale) for n in range(p.N + 1)
    )


def node_count_via_angles(p: PrueferSequence) -> int:
    """ceil(theta(N)/pi) - floor(theta(0)/pi) - 1."""
    scale = seq_scale(p.source.values)
    c_n = _resolve_ceil(p.theta[p.N], p.source.values[p.N], scale)
    f_0 = _resolve_floor(p.theta[0], p.source.values[0], scale)
    return c_n - f_0 - 1


def relative_angle_sequence(p0: PrueferSequence, p1: PrueferSequence) -> RelativeAngleSequence:
    if p0.N != p1.N:
        raise LengthMismatch(f"angle sequences disagree on N: {p0.N} vs {p1.N}")
    delta = tuple(t1 - t0 for t0, t1 in zip(p0.theta, p1.theta))
    return RelativeAngleSequence(delta, p0.source, p1.source)


def _cross(d: RelativeAngleSequence, n: int):
    """Quantity with the sign of sin(delta(n)): u1(n) u0(n+1) - u1(n+1) u0(n).

    Kept in the sources' native arithmetic so the sign is exact for
    rational solutions.
    """
    u0, u1 = d.source0.values, d.source1.values
    return u1[n] * u0[n + 1] - u1[n + 1] * u0[n]


def _cross_scale(d: RelativeAngleSequence) -> float:
    return seq_scale(_cross(d, n) for n in range(d.N + 1))


def delta_ceils(d: RelativeAngleSequence) -> tuple:
    """Resolved ceil(delta(n)/pi) for n = 0..N."""
    scale = _cross_scale(d)
    return tuple(_resolve_ceil(d.delta[n], _cross(d, n), scale) for n in range(d.N + 1))


def weighted_count_via_angles(d: RelativeAngleSequence) -> int:
    """ceil(delta(N)/pi) - floor(delta(0)/pi) - 1."""
    scale = _cross_scale(d)
    c_n = _resolve_ceil(d.delta[d.N], _cross(d, d.N), scale)
    f_0 = _resolve_floor(d.delta[0], _cross(d, 0), scale)
    return c_n - f_0 - 1
