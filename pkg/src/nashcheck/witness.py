"""Brute-force certification of (NN_(i,j)) verdicts.

A witness for the ordered pair ``(i, j)`` is a vector ``x`` of positive
integers with ``A.x <= C`` and ``x[i] < x[j]``.  Finding one proves the
condition from its definition, independently of any Schur complement.
Not finding one up to a bound proves nothing; reports always say which
bound was used.

The search runs in a compiled kernel when the extension is built and in a
pure-Python twin otherwise.  Set ``NASHCHECK_PURE_PYTHON=1`` to force the
latter.
"""
from __future__ import annotations

import enum
import os
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from math import lcm
from typing import Sequence

from . import _witness_py
from .engine import nn_matrix
from .linalg import SymMatrix

try:
    if os.environ.get("NASHCHECK_PURE_PYTHON"):
        raise ImportError("pure Python requested")
    from . import _witness_kernel
except ImportError:
    _witness_kernel = None

BACKEND = "cython" if _witness_kernel is not None else "python"
DEFAULT_BOUND = 12

__all__ = [
    "BACKEND",
    "DEFAULT_BOUND",
    "Witness",
    "PairStatus",
    "PairCheck",
    "CrossValidationReport",
    "integer_system",
    "verify_witness",
    "search_witness",
    "cross_validate",
]


@dataclass(frozen=True)
class Witness:
    x: tuple
    pair: tuple


class PairStatus(enum.Enum):
    CONFIRMED_TRUE = "confirmed_true"
    CONSISTENT_FALSE = "consistent_false"
    MISMATCH = "mismatch"  # engine TRUE, no witness up to the bound
    CONTRADICTION = "contradiction"  # engine FALSE, yet a witness exists


def integer_system(A: SymMatrix, C: Sequence) -> tuple[list, list]:
    """Scale each row of ``A.x <= C`` by its common denominator.

    Returns the row-major integer matrix and the integer right-hand side.
    Scaling a row by a positive number leaves its solution set unchanged.
    """
    n = A.n
    if len(C) != n:
        raise ValueError(f"right-hand side has {len(C)} entries, matrix has dimension {n}")
    flat, rhs = [], []
    for r in range(n):
        row = A[r]
        cr = Fraction(C[r])
        scale = lcm(*(x.denominator for x in row), cr.denominator)
        flat.extend(int(x * scale) for x in row)
        rhs.append(int(cr * scale))
    return flat, rhs


def _fits_int64(flat, rhs, n, bound):
    biggest = max(max(abs(v) for v in flat), max(abs(v) for v in rhs), 1)
    return biggest * (n + 1) * (bound + 1) < 2**62


def _kernel(flat, rhs, n, i, j, bound, propagate, backend):
    if backend is None:
        backend = BACKEND
    if backend not in ("cython", "python"):
        raise ValueError(f"unknown backend {backend!r}")
    if backend == "cython":
        if _witness_kernel is None:
            raise RuntimeError("compiled kernel is not available")
        if _fits_int64(flat, rhs, n, bound):
            return _witness_kernel.search(flat, rhs, n, i, j, bound, propagate)
    return _witness_py.search(flat, rhs, n, i, j, bound, propagate)


def verify_witness(A: SymMatrix, C: Sequence, w: Witness) -> bool:
    n = A.n
    if len(C) != n or len(w.x) != n:
        raise ValueError("witness, right-hand side and matrix dimensions differ")
    i, j = w.pair
    if not all(isinstance(v, int) and v >= 1 for v in w.x):
        return False
    if not w.x[i] < w.x[j]:
        return False
    return all(sum(A[r][t] * w.x[t] for t in range(n)) <= C[r] for r in range(n))


def search_witness(
    A: SymMatrix,
    C: Sequence,
    i: int,
    j: int,
    bound: int = DEFAULT_BOUND,
    pruning: str = "propagate",
    backend: str | None = None,
) -> Witness | None:
    """Lexicographically smallest witness in ``{1..bound}^n``, or None.

    ``pruning="rows"`` only discards prefixes whose row values are already
    too large; ``"propagate"`` also pushes lower bounds through the
    constraints and is much faster on refutations.  Both return the same
    witness.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    if i == j:
        raise ValueError("a pair needs two distinct indices")
    if pruning not in ("propagate", "rows"):
        raise ValueError(f"unknown pruning mode {pruning!r}")
    flat, rhs = integer_system(A, C)
    x, _ = _kernel(flat, rhs, A.n, i, j, bound, pruning == "propagate", backend)
    if x is None:
        return None
    return Witness(tuple(int(v) for v in x), (i, j))


@dataclass(frozen=True)
class PairCheck:
    i: int
    j: int
    verdict: bool
    witness: Witness | None
    status: PairStatus


@dataclass
class CrossValidationReport:
    bound: int
    checks: list = field(default_factory=list)

    def _count(self, status):
        return sum(1 for c in self.checks if c.status is status)

    @property
    def confirmed(self):
        return self._count(PairStatus.CONFIRMED_TRUE)

    @property
    def consistent_false(self):
        return self._count(PairStatus.CONSISTENT_FALSE)

    @property
    def mismatches(self):
        return self._count(PairStatus.MISMATCH)

    @property
    def contradictions(self):
        return self._count(PairStatus.CONTRADICTION)

    @property
    def ok(self):
        return self.mismatches == 0 and self.contradictions == 0

    def to_json(self):
        return {
            "bound": self.bound,
            "confirmed": self.confirmed,
            "consistent_false": self.consistent_false,
            "mismatches": self.mismatches,
            "contradictions": self.contradictions,
            "pairs": [
                {
                    "pair": [c.i + 1, c.j + 1],
                    "verdict": c.verdict,
                    "status": c.status.value,
                    "witness": list(c.witness.x) if c.witness else None,
                }
                for c in self.checks
            ],
        }


def cross_validate(
    A: SymMatrix,
    C: Sequence,
    bound: int = DEFAULT_BOUND,
    pruning: str = "propagate",
    backend: str | None = None,
) -> CrossValidationReport:
    """Compare every engine verdict with witness existence up to ``bound``."""
    N = nn_matrix(A)
    report = CrossValidationReport(bound)
    for i, j in permutations(range(A.n), 2):
        verdict = N[i][j]
        w = search_witness(A, C, i, j, bound, pruning, backend)
        if w is not None and not verify_witness(A, C, w):
            raise AssertionError(f"kernel returned an invalid witness {w}")
        if verdict:
            status = PairStatus.CONFIRMED_TRUE if w else PairStatus.MISMATCH
        else:
            status = PairStatus.CONTRADICTION if w else PairStatus.CONSISTENT_FALSE
        report.checks.append(PairCheck(i, j, verdict, w, status))
    return report
