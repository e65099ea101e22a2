"""Exact sign-based node counting and the two theorem-level counts.

``count_below`` realizes the classical result: the number of nodes of the
forward solution s_-(lambda, .) equals the number of eigenvalues below
lambda.  ``relative_count`` realizes the relative version: the number of
weighted nodes of the Wronskian of s_{0,-}(lambda0) and s_{1,+}(lambda1)
equals #{E in sigma(H1): E < lambda1} - #{E in sigma(H0): E <= lambda0}.

In exact mode every sign decision is error-free; in float mode signs are
classified under the module tolerance policy and near-zero classifications
emit ``NearEigenvalueWarning``.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .errors import (
    FloatModeUnreliableWarning,
    IndexOutOfRange,
    InconsistentSigns,
    NearEigenvalueWarning,
    PairingDisagreement,
)
from .jacobi import JacobiMatrix, require_compatible
from .numeric import Number, in_tolerance_band, seq_scale, sign
from .recurrence import (
    SolutionSequence,
    WronskianSequence,
    solve_minus,
    solve_plus,
    wronskian_pair,
)


@dataclass(frozen=True)
class CountReport:
    """A count together with the per-index indicators that produced it."""

    count: int
    method: str  # "direct-signs" | "pruefer-angles"
    details: tuple  # per-index indicator (or node flag) list
    boundary_correction: int = 0


def _solution_signs(u: SolutionSequence) -> list:
    scale = seq_scale(u.values)
    return [sign(v, scale) for v in u.values]


def is_node(u: SolutionSequence, n: int) -> bool:
    """n is a node iff u(n) = 0 or u(n) u(n+1) < 0."""
    if not 0 <= n <= u.N:
        raise IndexOutOfRange(f"node index {n} outside 0..{u.N}")
    scale = seq_scale(u.values)
    s0 = sign(u.values[n], scale)
    s1 = sign(u.values[n + 1], scale)
    return s0 == 0 or s0 * s1 < 0


def count_nodes(u: SolutionSequence, m: int, n: int) -> int:
    """Nodes lying between m and n: those with m < n0 < n, plus the node at
    m itself when u(m) != 0."""
    if not 0 <= m < n <= u.N:
        raise IndexOutOfRange(f"need 0 <= m < n <= {u.N}, got ({m}, {n})")
    scale = seq_scale(u.values)
    signs = _solution_signs(u)
    total = 0
    for n0 in range(m, n):
        node = signs[n0] == 0 or signs[n0] * signs[n0 + 1] < 0
        if node and (n0 > m or signs[m] != 0):
            total += 1
    return total


def node_report(u: SolutionSequence, m: int, n: int) -> CountReport:
    signs = _solution_signs(u)
    flags = tuple(
        1 if (signs[n0] == 0 or signs[n0] * signs[n0 + 1] < 0) and (n0 > m or signs[m] != 0) else 0
        for n0 in range(m, n)
    )
    return CountReport(sum(flags), "direct-signs", flags)


def count_below(h: JacobiMatrix, lam: Number) -> int:
    """Number of eigenvalues of H strictly below lambda (Sturm-type count)."""
    u = solve_minus(h, lam)
    if in_tolerance_band(u.values[h.N], seq_scale(u.values)):
        warnings.warn(
            "s_-(lambda, N) is inside the tolerance band; lambda may be an eigenvalue",
            NearEigenvalueWarning,
            stacklevel=2,
        )
    return count_nodes(u, 0, h.N)


def is_eigenvalue(h: JacobiMatrix, lam: Number) -> bool:
    """True iff s_-(lambda, N) = 0; exact only in rational mode."""
    u = solve_minus(h, lam)
    scale = seq_scale(u.values)
    if in_tolerance_band(u.values[h.N], scale):
        warnings.warn(
            "eigenvalue decision fell inside the float tolerance band",
            FloatModeUnreliableWarning,
            stacklevel=2,
        )
    return sign(u.values[h.N], scale) == 0


def _wronskian_signs(w: WronskianSequence):
    w_scale = seq_scale(w.values)
    b_scale = seq_scale(w.b_diff)
    sw = [sign(v, w_scale) for v in w.values]
    sb = [sign(v, b_scale) for v in w.b_diff]
    return sw, sb


def _indicator_from_signs(sw_n: int, sw_n1: int, sb: int) -> int:
    if sb == 0:
        if sw_n * sw_n1 < 0 or (sw_n == 0) != (sw_n1 == 0):
            raise InconsistentSigns(
                "Wronskian sign change with b_diff = 0 is impossible; "
                "in float mode this signals a tolerance failure"
            )
        return 0
    if sb > 0 and (sw_n * sw_n1 < 0 or (sw_n == 0 and sw_n1 != 0)):
        return 1
    if sb < 0 and (sw_n * sw_n1 < 0 or (sw_n != 0 and sw_n1 == 0)):
        return -1
    return 0


def weighted_node_indicator(w: WronskianSequence, n: int) -> int:
    """Weighted node indicator in {-1, 0, +1} at index 0 <= n <= N-1."""
    if not 0 <= n <= w.N - 1:
        raise IndexOutOfRange(f"indicator index {n} outside 0..{w.N - 1}")
    sw, sb = _wronskian_signs(w)
    return _indicator_from_signs(sw[n], sw[n + 1], sb[n])


def weighted_node_report(w: WronskianSequence) -> CountReport:
    sw, sb = _wronskian_signs(w)
    indicators = tuple(
        _indicator_from_signs(sw[n], sw[n + 1], sb[n]) for n in range(w.N)
    )
    correction = -1 if sw[0] == 0 else 0
    return CountReport(sum(indicators) + correction, "direct-signs", indicators, correction)


def weighted_node_count(w: WronskianSequence) -> int:
    """Sum of weighted node indicators, minus 1 when W_0 = 0."""
    return weighted_node_report(w).count


def relative_count_report(
    h0: JacobiMatrix, h1: JacobiMatrix, lam0: Number, lam1: Number
):
    """Both solution pairings of the relative count, with details."""
    require_compatible(h0, h1)
    w_a = wronskian_pair(h0, h1, solve_minus(h0, lam0), solve_plus(h1, lam1))
    w_b = wronskian_pair(h0, h1, solve_plus(h0, lam0), solve_minus(h1, lam1))
    return weighted_node_report(w_a), weighted_node_report(w_b)


def relative_count(h0: JacobiMatrix, h1: JacobiMatrix, lam0: Number, lam1: Number) -> int:
    """#{E in sigma(H1): E < lambda1} - #{E in sigma(H0): E <= lambda0}.

    Computed from both solution pairings, which must agree; disagreement is
    always a bug or a float-tolerance breach.
    """
    rep_a, rep_b = relative_count_report(h0, h1, lam0, lam1)
    if rep_a.count != rep_b.count:
        raise PairingDisagreement(
            f"pairings disagree: {rep_a.count} vs {rep_b.count} "
            f"(indicators {rep_a.details} vs {rep_b.details})"
        )
    return rep_a.count
