"""Relative oscillation theory for finite Jacobi matrices.

Eigenvalue counts via node counting of solutions, and differences of
eigenvalue counts between two matrices via weighted nodes of Wronskians,
cross-checked by Prüfer angles and an independent dense eigensolver.
"""

from .errors import (
    BranchAmbiguity,
    CoefficientMismatch,
    DegenerateSolution,
    DimensionMismatch,
    EpsOutOfRange,
    InconsistentSigns,
    IndexOutOfRange,
    LengthMismatch,
    MarginViolation,
    NearEigenvalueWarning,
    NoConvergence,
    NonNegativeOffDiagonal,
    PairingDisagreement,
    ParseError,
    ReloscError,
)
from .jacobi import JacobiMatrix, free_matrix, interpolate, new_jacobi
from .recurrence import (
    SolutionSequence,
    WronskianSequence,
    check_wronskian_step,
    solve_minus,
    solve_plus,
    wronskian_pair,
    wronskian_sequence,
)
from .pruefer import (
    PrueferSequence,
    RelativeAngleSequence,
    node_count_via_angles,
    pruefer_sequence,
    relative_angle_sequence,
    weighted_count_via_angles,
)
from .oscillation import (
    CountReport,
    count_below,
    count_nodes,
    is_eigenvalue,
    is_node,
    relative_count,
    weighted_node_count,
    weighted_node_indicator,
)
from .oracle import (
    SpectrumReport,
    count_below_oracle,
    eigenvalues_dense,
    free_matrix_spectrum,
)
from .homotopy import (
    BranchTable,
    PerturbationSplit,
    eigenvalue_branches,
    pruefer_eps_derivative,
    signed_crossing_count,
    split_perturbation,
    two_phase_path,
    wronskian_eps_derivative,
)

__version__ = "0.1.0"

__all__ = [
    "ReloscError",
    "DimensionMismatch",
    "NonNegativeOffDiagonal",
    "IndexOutOfRange",
    "CoefficientMismatch",
    "EpsOutOfRange",
    "LengthMismatch",
    "DegenerateSolution",
    "BranchAmbiguity",
    "InconsistentSigns",
    "PairingDisagreement",
    "MarginViolation",
    "NoConvergence",
    "ParseError",
    "NearEigenvalueWarning",
    "JacobiMatrix",
    "free_matrix",
    "interpolate",
    "new_jacobi",
    "SolutionSequence",
    "WronskianSequence",
    "solve_minus",
    "solve_plus",
    "wronskian_sequence",
    "wronskian_pair",
    "check_wronskian_step",
    "PrueferSequence",
    "RelativeAngleSequence",
    "pruefer_sequence",
    "node_count_via_angles",
    "relative_angle_sequence",
    "weighted_count_via_angles",
    "CountReport",
    "is_node",
    "count_nodes",
    "count_below",
    "is_eigenvalue",
    "weighted_node_indicator",
    "weighted_node_count",
    "relative_count",
    "SpectrumReport",
    "eigenvalues_dense",
    "count_below_oracle",
    "free_matrix_spectrum",
    "PerturbationSplit",
    "BranchTable",
    "split_perturbation",
    "two_phase_path",
    "eigenvalue_branches",
    "wronskian_eps_derivative",
    "pruefer_eps_derivative",
    "signed_crossing_count",
]
