"""Exact rational matrices.

All entries are :class:`fractions.Fraction`; nothing here ever touches a
float.  Indices are 0-based.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import SymmetryError

__all__ = [
    "Fraction",
    "SymMatrix",
    "Permutation",
    "permute_principal",
    "principal_submatrix",
    "exact_determinant",
    "to_fraction",
]


def to_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floating point entries are not accepted; use int, str or Fraction")
    return Fraction(value)


class SymMatrix:
    """Immutable dense symmetric matrix over the rationals.

    >>> A = SymMatrix([[-2, 1], [1, -2]])
    >>> A.n, A[0][1]
    (2, Fraction(1, 1))
    """

    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[Iterable]):
        rows = tuple(tuple(to_fraction(x) for x in row) for row in rows)
        n = len(rows)
        if n == 0:
            raise ValueError("matrix must have at least one row")
        for i, row in enumerate(rows):
            if len(row) != n:
                raise ValueError(f"row {i + 1} has {len(row)} entries, expected {n}")
        for i in range(n):
            for j in range(i + 1, n):
                if rows[i][j] != rows[j][i]:
                    raise SymmetryError(
                        f"entry ({i + 1},{j + 1}) = {rows[i][j]} but ({j + 1},{i + 1}) = {rows[j][i]}"
                    )
        self._rows = rows

    @classmethod
    def _trusted(cls, rows):
        # rows already a symmetric tuple-of-tuples of Fractions
        obj = SymMatrix.__new__(SymMatrix)
        obj._rows = rows
        return obj

    @property
    def n(self) -> int:
        return len(self._rows)

    @property
    def rows(self):
        return self._rows

    def __getitem__(self, i):
        return self._rows[i]

    def __iter__(self):
        return iter(self._rows)

    def __len__(self):
        return len(self._rows)

    def __eq__(self, other):
        if isinstance(other, SymMatrix):
            return self._rows == other._rows
        return NotImplemented

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        body = ", ".join("[" + ", ".join(str(x) for x in row) + "]" for row in self._rows)
        return f"SymMatrix([{body}])"

    def diagonal(self):
        return tuple(self._rows[i][i] for i in range(self.n))

    def scaled(self, alpha) -> "SymMatrix":
        alpha = to_fraction(alpha)
        return SymMatrix._trusted(tuple(tuple(alpha * x for x in row) for row in self._rows))

    def with_diagonal_entry(self, k: int, value) -> "SymMatrix":
        value = to_fraction(value)
        rows = [list(row) for row in self._rows]
        rows[k][k] = value
        return SymMatrix._trusted(tuple(tuple(r) for r in rows))

    def to_lists(self):
        """Rows as nested lists, integral entries converted to ``int``."""
        return [[int(x) if x.denominator == 1 else x for x in row] for row in self._rows]


class Permutation:
    """Bijection on ``range(n)``; ``sigma(k)`` is the new position of vertex ``k``."""

    __slots__ = ("mapping",)

    def __init__(self, mapping: Sequence[int]):
        mapping = tuple(int(m) for m in mapping)
        if sorted(mapping) != list(range(len(mapping))):
            raise ValueError(f"not a permutation of 0..{len(mapping) - 1}: {mapping}")
        self.mapping = mapping

    @classmethod
    def identity(cls, n):
        return cls(range(n))

    @classmethod
    def from_cycle(cls, n, cycle):
        """Cyclic permutation sending ``cycle[0] -> cycle[1] -> ... -> cycle[0]``."""
        mapping = list(range(n))
        for a, b in zip(cycle, list(cycle[1:]) + [cycle[0]]):
            mapping[a] = b
        return cls(mapping)

    def __len__(self):
        return len(self.mapping)

    def __call__(self, k):
        return self.mapping[k]

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.mapping)
        for k, m in enumerate(self.mapping):
            inv[m] = k
        return Permutation(inv)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.mapping == other.mapping

    def __hash__(self):
        return hash(self.mapping)

    def __repr__(self):
        return f"Permutation({list(self.mapping)})"


def permute_principal(A: SymMatrix, sigma: Permutation) -> SymMatrix:
    """Relabel rows and columns: ``result[sigma(i)][sigma(j)] = A[i][j]``."""
    if len(sigma) != A.n:
        raise ValueError(f"permutation of size {len(sigma)} does not act on a {A.n}x{A.n} matrix")
    inv = sigma.inverse().mapping
    rows = A.rows
    return SymMatrix._trusted(tuple(tuple(rows[inv[i]][inv[j]] for j in range(A.n)) for i in range(A.n)))


def _check_index_list(keep, n):
    keep = [int(k) for k in keep]
    if not keep:
        raise ValueError("index list is empty")
    for k in keep:
        if not 0 <= k < n:
            raise IndexError(f"index {k} out of range for dimension {n}")
    if len(set(keep)) != len(keep):
        raise ValueError(f"duplicate index in {keep}")
    return keep


def principal_submatrix(A: SymMatrix, keep: Sequence[int]) -> SymMatrix:
    keep = _check_index_list(keep, A.n)
    rows = A.rows
    return SymMatrix._trusted(tuple(tuple(rows[p][q] for q in keep) for p in keep))


def exact_determinant(A) -> Fraction:
    """Determinant by rational Gaussian elimination with row swaps on zero pivots."""
    M = [list(map(to_fraction, row)) for row in A]
    n = len(M)
    if any(len(row) != n for row in M):
        raise ValueError("determinant needs a square matrix")
    det = Fraction(1)
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if M[r][col] != 0), None)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != col:
            M[col], M[pivot_row] = M[pivot_row], M[col]
            det = -det
        pivot = M[col][col]
        det *= pivot
        for r in range(col + 1, n):
            factor = M[r][col] / pivot
            if factor:
                row_r, row_c = M[r], M[col]
                for c in range(col, n):
                    row_r[c] -= factor * row_c[c]
    return det
