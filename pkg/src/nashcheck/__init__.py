"""Exact checker for numerical Nash conditions on resolution graphs.

Given the intersection matrix of the exceptional curves of a minimal
resolution, decides for every ordered pair of curves whether the numerical
Nash condition holds, using exact rational Schur complements.  A
brute-force witness search and a battery of graph-shape theorems provide
independent cross-checks.
"""
from .engine import NashVerdictMatrix, decide_pair, is_nash_matrix, nn_matrix
from .errors import (
    DisconnectedGraphError,
    MinimalityError,
    NotNegativeDefiniteError,
    ParseError,
    SignPatternError,
    SymmetryError,
    ValidationError,
    ZeroPivotError,
)
from .gauss import (
    contract_last,
    full_rowsum_criterion,
    is_negative_definite,
    ladder,
    row_sums,
    schur_onto,
    star_condition,
)
from .linalg import Permutation, SymMatrix, exact_determinant, permute_principal, principal_submatrix
from .model import IntersectionMatrix, canonical_vector, dual_graph, parse_matrix_file
from .structure import classify, classify_matrix, theorem_battery
from .witness import cross_validate, search_witness, verify_witness

__version__ = "0.1.0"
