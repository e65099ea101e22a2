from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from relosc.errors import (
    CoefficientMismatch,
    InconsistentSigns,
    IndexOutOfRange,
)
from relosc.jacobi import JacobiMatrix, free_matrix, new_jacobi
from relosc.oscillation import (
    count_below,
    count_nodes,
    is_eigenvalue,
    is_node,
    relative_count,
    relative_count_report,
    weighted_node_count,
    weighted_node_indicator,
    weighted_node_report,
)
from relosc.recurrence import (
    SolutionSequence,
    WronskianSequence,
    solve_minus,
    solve_plus,
    wronskian_pair,
)

from test_jacobi import fractions_st, jacobi_st


def custom(values, z=0):
    return SolutionSequence(z, "custom", tuple(values), len(values) - 2)


OSC = custom([0, 1, 0, -1, 0, 1, 0])  # s_-(0, .) of F(5)


def test_is_node_zero_value():
    assert is_node(OSC, 2)


def test_is_node_zero_right_neighbour_is_not_a_node():
    assert not is_node(OSC, 3)  # u(3) = -1, u(3) u(4) = 0


def test_is_node_sign_flip():
    assert is_node(custom([0, 1, -1, 1]), 1)


def test_is_node_range_check():
    with pytest.raises(IndexOutOfRange):
        is_node(OSC, 6)


def test_count_nodes_free_matrix():
    assert count_nodes(OSC, 0, 5) == 2  # node at 0 excluded: u(0) = 0


def test_count_nodes_left_endpoint_counts_when_nonzero():
    assert count_nodes(custom([1, -1, 1, -1]), 0, 2) == 2


def test_count_nodes_positive_solution():
    assert count_nodes(custom([0, 1, 2, 3]), 0, 2) == 0


def test_count_nodes_range_check():
    with pytest.raises(IndexOutOfRange):
        count_nodes(OSC, 3, 3)


def test_count_below_free_matrix():
    assert count_below(free_matrix(5), 0) == 2
    assert count_below(free_matrix(5), -2) == 0
    assert count_below(free_matrix(5), 2) == 4


def test_count_below_one_by_one():
    assert count_below(new_jacobi(2, [], [Fraction(3)]), 4) == 1


def test_is_eigenvalue():
    assert is_eigenvalue(new_jacobi(2, [], [Fraction(0)]), 0)
    assert not is_eigenvalue(new_jacobi(2, [], [Fraction(0)]), 1)
    assert not is_eigenvalue(free_matrix(5), 0)
    # F(3) has the rational spectrum {-1, 1}
    assert is_eigenvalue(free_matrix(3), 1)
    assert is_eigenvalue(free_matrix(3), -1)


def test_weighted_indicator_plus_one():
    h0, h1 = new_jacobi(2, [], [Fraction(1)]), new_jacobi(2, [], [Fraction(-1)])
    w = wronskian_pair(h0, h1, solve_minus(h0, 0), solve_plus(h1, 0))
    assert weighted_node_indicator(w, 0) == 1


def test_weighted_indicator_minus_one():
    h0, h1 = new_jacobi(2, [], [Fraction(0)]), new_jacobi(2, [], [Fraction(1)])
    w = wronskian_pair(h0, h1, solve_minus(h0, 0), solve_plus(h1, 0))
    assert w.values[:2] == (-1, 0)
    assert w.b_diff[0] == -1
    assert weighted_node_indicator(w, 0) == -1


def test_weighted_indicator_zero_for_flat_wronskian():
    w = WronskianSequence((1, 1, 1), (0, 0))
    assert weighted_node_indicator(w, 0) == 0
    assert weighted_node_indicator(w, 1) == 0


def test_weighted_indicator_asymmetric_zero_clauses():
    # one-sided zeros: entering a zero counts only for negative weight,
    # leaving a zero only for positive weight
    assert weighted_node_indicator(WronskianSequence((1, 0), (1,)), 0) == 0
    assert weighted_node_indicator(WronskianSequence((1, 0), (-1,)), 0) == -1
    assert weighted_node_indicator(WronskianSequence((0, 1), (1,)), 0) == 1
    assert weighted_node_indicator(WronskianSequence((0, 1), (-1,)), 0) == 0


def test_weighted_indicator_range_check():
    with pytest.raises(IndexOutOfRange):
        weighted_node_indicator(WronskianSequence((1, 0), (1,)), 1)


def test_inconsistent_signs_detected():
    with pytest.raises(InconsistentSigns):
        weighted_node_indicator(WronskianSequence((1, -1), (0,)), 0)
    with pytest.raises(InconsistentSigns):
        weighted_node_indicator(WronskianSequence((1, 0), (0,)), 0)


def test_weighted_count_identical_matrices_at_eigenvalue():
    h = new_jacobi(2, [], [Fraction(0)])
    w = wronskian_pair(h, h, solve_minus(h, 0), solve_plus(h, 0))
    assert all(v == 0 for v in w.values)
    assert weighted_node_count(w) == -1


def test_weighted_count_hand_example():
    h0, h1 = new_jacobi(2, [], [Fraction(1)]), new_jacobi(2, [], [Fraction(-1)])
    w = wronskian_pair(h0, h1, solve_minus(h0, 0), solve_plus(h1, 0))
    assert weighted_node_count(w) == 1


def test_weighted_count_identical_matrices_off_spectrum():
    h = free_matrix(5)
    w = wronskian_pair(h, h, solve_minus(h, 0), solve_plus(h, 0))
    assert weighted_node_count(w) == 0


def test_weighted_report_details():
    h0, h1 = new_jacobi(2, [], [Fraction(1)]), new_jacobi(2, [], [Fraction(-1)])
    w = wronskian_pair(h0, h1, solve_minus(h0, 0), solve_plus(h1, 0))
    rep = weighted_node_report(w)
    assert rep.count == sum(rep.details) + rep.boundary_correction
    assert rep.method == "direct-signs"


def test_relative_count_fixtures():
    z = new_jacobi(2, [], [Fraction(0)])
    assert relative_count(z, z, 0, 0) == -1
    one, neg = new_jacobi(2, [], [Fraction(1)]), new_jacobi(2, [], [Fraction(-1)])
    assert relative_count(one, neg, 0, 0) == 1
    assert relative_count(free_matrix(5), free_matrix(5), 0, 0) == 0


def test_relative_count_requires_shared_a():
    h0 = new_jacobi(3, [Fraction(-1)], [0, 0])
    h1 = new_jacobi(3, [Fraction(-2)], [0, 0])
    with pytest.raises(CoefficientMismatch):
        relative_count(h0, h1, 0, 0)


@settings(deadline=None)
@given(jacobi_st(), fractions_st)
def test_swap_sanity(h, lam):
    expected = -1 if is_eigenvalue(h, lam) else 0
    assert relative_count(h, h, lam, lam) == expected


@settings(deadline=None)
@given(jacobi_st(), st.data())
def test_pairing_symmetry_and_terminal_indicator(h0, data):
    b1 = tuple(data.draw(fractions_st) for _ in range(h0.dim))
    h1 = JacobiMatrix(h0.N, h0.a, b1)
    lam0 = data.draw(fractions_st)
    lam1 = data.draw(fractions_st)
    rep_a, rep_b = relative_count_report(h0, h1, lam0, lam1)
    assert rep_a.count == rep_b.count
    # b_diff(N) = 0 by convention, so the last indicator always vanishes
    assert rep_a.details[-1] == 0
    assert rep_b.details[-1] == 0
