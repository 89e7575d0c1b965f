"""Gauss sequences: iterated Schur complements and their row sums.

Eliminating index ``k`` from ``A`` replaces every remaining entry by
``a_ij - a_ik * a_kj / a_kk``.  Repeating this from the last index down is
the Gauss sequence ``A^(n), A^(n-1), ...``; the pivots ``a^(l)_ll`` are all
negative exactly when ``A`` is negative definite.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .errors import ZeroPivotError
from .linalg import SymMatrix, _check_index_list

DEFAULT_MAX_N = 24


@dataclass(frozen=True)
class GaussState:
    level: int
    matrix: SymMatrix
    rowsums: tuple


def _eliminate(rows, k):
    """Schur complement of the list-of-lists ``rows`` w.r.t. position ``k``, in place."""
    pivot = rows[k][k]
    if pivot == 0:
        raise ZeroPivotError(f"zero pivot at position {k + 1}")
    col = rows[k]
    coupled = [t for t in range(len(rows)) if t != k and col[t]]
    for ai, a in enumerate(coupled):
        scaled = col[a] / pivot
        row_a = rows[a]
        for b in coupled[ai:]:
            value = row_a[b] - scaled * col[b]
            row_a[b] = value
            rows[b][a] = value
    del rows[k]
    for row in rows:
        del row[k]


def _freeze(rows):
    return SymMatrix._trusted(tuple(tuple(r) for r in rows))


def contract_last(A: SymMatrix) -> SymMatrix:
    """One step of the Gauss sequence: eliminate the last index."""
    if A.n < 2:
        raise ValueError("cannot contract a 1x1 matrix")
    rows = [list(r) for r in A.rows]
    _eliminate(rows, A.n - 1)
    return _freeze(rows)


def schur_onto(A: SymMatrix, keep: Sequence[int], elimination_order: Sequence[int] | None = None) -> SymMatrix:
    """Schur complement of ``A`` onto the indices ``keep`` (rows ordered as in ``keep``).

    The eliminated indices are removed one at a time, by default from the
    highest index down.  The result does not depend on that order; pass
    ``elimination_order`` to choose it explicitly.
    """
    keep = _check_index_list(keep, A.n)
    kept = set(keep)
    eliminated = [k for k in range(A.n - 1, -1, -1) if k not in kept]
    if elimination_order is not None:
        order = [int(k) for k in elimination_order]
        if sorted(order) != sorted(eliminated):
            raise ValueError("elimination order must list exactly the indices outside keep")
        eliminated = order
    labels = list(range(A.n))
    rows = [list(r) for r in A.rows]
    for k in eliminated:
        pos = labels.index(k)
        _eliminate(rows, pos)
        del labels[pos]
    pos = [labels.index(k) for k in keep]
    return SymMatrix._trusted(tuple(tuple(rows[p][q] for q in pos) for p in pos))


def row_sums(A) -> tuple:
    return tuple(sum(row, Fraction(0)) for row in A)


def gauss_sequence(A: SymMatrix) -> list[GaussState]:
    """States ``A^(n), A^(n-1), ..., A^(2)`` (just ``A^(1)`` when n = 1)."""
    states = [GaussState(A.n, A, row_sums(A))]
    current = A
    while current.n > 2:
        current = contract_last(current)
        states.append(GaussState(current.n, current, row_sums(current)))
    return states


def first_nonnegative_pivot(A: SymMatrix):
    """``(level, pivot)`` of the first pivot that is >= 0, or None if all are negative."""
    rows = [list(r) for r in A.rows]
    while rows:
        level = len(rows)
        pivot = rows[-1][-1]
        if pivot >= 0:
            return level, pivot
        _eliminate(rows, level - 1)
    return None


def is_negative_definite(A: SymMatrix) -> bool:
    return first_nonnegative_pivot(A) is None


def full_rowsum_criterion(A) -> bool:
    return all(s < 0 for s in row_sums(A))


def star_condition(A: SymMatrix, l: int, max_n: int = DEFAULT_MAX_N) -> bool:
    """Every row sum of every Schur complement onto ``l + 1`` indices is negative.

    Checking subsets is enough because a Schur complement depends only on
    the eliminated set, not on the elimination order.
    """
    n = A.n
    if n > max_n:
        raise ValueError(f"dimension {n} exceeds the subset-enumeration limit {max_n}")
    if not 1 <= l <= n - 1:
        raise ValueError(f"level l={l} outside 1..{n - 1}")
    for subset in combinations(range(n), l + 1):
        if not all(s < 0 for s in row_sums(schur_onto(A, subset))):
            return False
    return True


def ladder(A: SymMatrix, max_n: int = DEFAULT_MAX_N) -> list[int]:
    """All levels ``l`` for which :func:`star_condition` holds."""
    return [l for l in range(1, A.n) if star_condition(A, l, max_n)]
