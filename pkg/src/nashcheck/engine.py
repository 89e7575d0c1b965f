"""Pairwise numerical Nash conditions and the verdict matrix N."""
from __future__ import annotations

import json
from itertools import combinations

from .gauss import schur_onto
from .linalg import SymMatrix

__all__ = ["NashVerdictMatrix", "decide_pair", "decide_both", "nn_matrix", "is_nash_matrix"]


class NashVerdictMatrix:
    """Cells are ``True``/``False`` off the diagonal and ``None`` on it."""

    __slots__ = ("cells",)

    def __init__(self, cells):
        cells = tuple(tuple(c) for c in cells)
        n = len(cells)
        for i, row in enumerate(cells):
            if len(row) != n:
                raise ValueError("verdict matrix must be square")
            for j, cell in enumerate(row):
                if (i == j) != (cell is None):
                    raise ValueError(f"cell ({i + 1},{j + 1}) = {cell!r}: diagonal cells must be None, others bool")
                if cell is not None and not isinstance(cell, bool):
                    raise ValueError(f"cell ({i + 1},{j + 1}) must be a bool")
        self.cells = cells

    @property
    def n(self):
        return len(self.cells)

    def __getitem__(self, i):
        return self.cells[i]

    def __eq__(self, other):
        return isinstance(other, NashVerdictMatrix) and self.cells == other.cells

    def __hash__(self):
        return hash(self.cells)

    def __repr__(self):
        return f"NashVerdictMatrix({self.to_text()!r})"

    def false_cells(self):
        return [(i, j) for i in range(self.n) for j in range(self.n) if self.cells[i][j] is False]

    def all_true(self):
        return not self.false_cells()

    def to_text(self) -> str:
        symbol = {True: "1", False: "0", None: "."}
        return "\n".join(" ".join(symbol[c] for c in row) for row in self.cells) + "\n"

    @classmethod
    def from_text(cls, text):
        symbol = {"1": True, "0": False, ".": None}
        return cls([[symbol[t] for t in line.split()] for line in text.strip().splitlines()])

    def to_json(self):
        return [list(row) for row in self.cells]

    @classmethod
    def from_json(cls, data):
        if isinstance(data, str):
            data = json.loads(data)
        return cls(data)


def _check_pair(A, i, j):
    if i == j:
        raise ValueError("a pair needs two distinct indices")
    for k in (i, j):
        if not 0 <= k < A.n:
            raise IndexError(f"index {k} out of range for dimension {A.n}")


def decide_pair(A: SymMatrix, i: int, j: int) -> bool:
    """Whether (NN_(i,j)) holds: ``B[0][0] + B[0][1] < 0`` for ``B = schur_onto(A, (i, j))``."""
    _check_pair(A, i, j)
    B = schur_onto(A, (i, j))
    return B[0][0] + B[0][1] < 0


def decide_both(A: SymMatrix, i: int, j: int):
    """``(decide_pair(A, i, j), decide_pair(A, j, i))`` from a single contraction."""
    _check_pair(A, i, j)
    B = schur_onto(A, (i, j))
    return B[0][0] + B[0][1] < 0, B[1][1] + B[0][1] < 0


def nn_matrix(A: SymMatrix) -> NashVerdictMatrix:
    n = A.n
    cells = [[None] * n for _ in range(n)]
    for i, j in combinations(range(n), 2):
        cells[i][j], cells[j][i] = decide_both(A, i, j)
    return NashVerdictMatrix(cells)


def is_nash_matrix(A: SymMatrix) -> bool:
    """True iff every off-diagonal cell of N is true (vacuously for n = 1)."""
    n = A.n
    for i, j in combinations(range(n), 2):
        forward, backward = decide_both(A, i, j)
        if not (forward and backward):
            return False
    return True
