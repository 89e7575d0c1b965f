"""Validated intersection matrices, genus data and the text file format."""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Sequence

import networkx as nx

from .errors import (
    DisconnectedGraphError,
    MinimalityError,
    NotNegativeDefiniteError,
    ParseError,
    SignPatternError,
)
from .gauss import first_nonnegative_pivot
from .linalg import SymMatrix

__all__ = [
    "IntersectionMatrix",
    "canonical_vector",
    "check_minimality",
    "dual_graph",
    "parse_matrix_file",
    "format_matrix_file",
]


class IntersectionMatrix(SymMatrix):
    """A symmetric matrix that can occur as the intersection matrix of a resolution.

    Construction validates, in this order: symmetry, the sign pattern
    (negative diagonal, nonnegative off-diagonal), connectivity of the dual
    graph and negative definiteness.  Each failure raises its own subclass
    of :class:`~nashcheck.errors.ValidationError`.
    """

    __slots__ = ()

    def __init__(self, rows):
        super().__init__(rows)
        _validate(self)

    @classmethod
    def from_matrix(cls, A: SymMatrix) -> "IntersectionMatrix":
        return cls(A.rows)


def _validate(A: SymMatrix):
    n = A.n
    for i in range(n):
        if A[i][i] >= 0:
            raise SignPatternError(f"diagonal entry ({i + 1},{i + 1}) = {A[i][i]} must be negative")
        for j in range(i + 1, n):
            if A[i][j] < 0:
                raise SignPatternError(f"off-diagonal entry ({i + 1},{j + 1}) = {A[i][j]} must be >= 0")
    if not nx.is_connected(dual_graph(A)):
        parts = sorted(sorted(k + 1 for k in c) for c in nx.connected_components(dual_graph(A)))
        raise DisconnectedGraphError(f"dual graph is disconnected: components {parts}")
    bad = first_nonnegative_pivot(A)
    if bad is not None:
        raise NotNegativeDefiniteError(*bad)


def dual_graph(A: SymMatrix) -> nx.Graph:
    """Vertices ``0..n-1``; an edge wherever the off-diagonal entry is nonzero."""
    G = nx.Graph()
    G.add_nodes_from(range(A.n))
    for i in range(A.n):
        for j in range(i + 1, A.n):
            if A[i][j] != 0:
                G.add_edge(i, j, weight=A[i][j])
    return G


def check_minimality(A: SymMatrix, genus: Sequence[int]):
    if len(genus) != A.n:
        raise ValueError(f"genus vector has {len(genus)} entries, matrix has dimension {A.n}")
    for i, p in enumerate(genus):
        if p < 0:
            raise MinimalityError(f"genus of component {i + 1} is negative ({p})")
        if A[i][i] > 2 * p - 2:
            raise MinimalityError(
                f"component {i + 1}: self-intersection {A[i][i]} > 2*genus-2 = {2 * p - 2}"
                " (a (-1)-curve of genus 0 contradicts minimality)"
            )


def canonical_vector(A: SymMatrix, genus: Sequence[int] | None = None) -> tuple:
    """``c_i = -2 K.E_i = 2 a_ii + 4 - 4 p_i``; every entry is <= 0 for a minimal resolution."""
    if genus is None:
        genus = (0,) * A.n
    check_minimality(A, genus)
    return tuple(2 * A[i][i] + 4 - 4 * Fraction(p) for i, p in enumerate(genus))


_ENTRY = re.compile(r"[+-]?\d+(?:/\d+)?\Z")


def _parse_entry(token, line, column):
    if not _ENTRY.match(token):
        raise ParseError(f"malformed entry {token!r}", line, column)
    value = Fraction(token)
    if "/" in token and int(token.split("/")[1]) == 0:
        raise ParseError(f"zero denominator in {token!r}", line, column)
    return value


def _tokens(text):
    for match in re.finditer(r"\S+", text):
        yield match.group(), match.start() + 1


def parse_matrix_file(text: str):
    """Parse the text format and validate.  Returns ``(IntersectionMatrix, genus)``.

    The format: ``#`` lines and blank lines are ignored; the first line
    holds ``n``; then ``n`` rows of ``n`` entries (integers or ``p/q``);
    optionally a final ``genus: p_1 ... p_n`` line.
    """
    lines = [
        (number, line)
        for number, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines:
        raise ParseError("empty input: expected the dimension n")
    number, line = lines[0]
    tokens = list(_tokens(line))
    if len(tokens) != 1 or not re.fullmatch(r"\+?\d+", tokens[0][0]):
        raise ParseError(f"expected a single positive integer n, got {line.strip()!r}", number, 1)
    n = int(tokens[0][0])
    if n < 1:
        raise ParseError("dimension n must be at least 1", number, tokens[0][1])
    if len(lines) < n + 1:
        raise ParseError(f"expected {n} matrix rows, found {len(lines) - 1}", lines[-1][0])

    rows = []
    for number, line in lines[1 : n + 1]:
        tokens = list(_tokens(line))
        if tokens and tokens[0][0].lower().startswith("genus"):
            raise ParseError(f"expected {n} matrix rows before the genus line", number, 1)
        if len(tokens) != n:
            column = tokens[n][1] if len(tokens) > n else len(line) + 1
            raise ParseError(f"expected {n} entries, found {len(tokens)}", number, column)
        rows.append([_parse_entry(tok, number, col) for tok, col in tokens])

    genus = (0,) * n
    rest = lines[n + 1 :]
    if rest:
        number, line = rest[0]
        tokens = list(_tokens(line))
        if tokens[0][0].lower() != "genus:":
            raise ParseError(f"unexpected content {line.strip()!r} after the matrix", number, tokens[0][1])
        values = tokens[1:]
        if len(values) != n:
            raise ParseError(f"genus line needs {n} values, found {len(values)}", number, 1)
        parsed = []
        for tok, col in values:
            if not re.fullmatch(r"\+?\d+", tok):
                raise ParseError(f"genus must be a nonnegative integer, got {tok!r}", number, col)
            parsed.append(int(tok))
        genus = tuple(parsed)
        if len(rest) > 1:
            raise ParseError("unexpected content after the genus line", rest[1][0], 1)

    M = IntersectionMatrix(rows)
    check_minimality(M, genus)
    return M, genus


def format_matrix_file(A: SymMatrix, genus: Sequence[int] | None = None, comment: str | None = None) -> str:
    out = []
    if comment:
        out.extend("# " + c for c in comment.splitlines())
    out.append(str(A.n))
    for row in A:
        out.append(" ".join(str(x) for x in row))
    if genus is not None and any(genus):
        out.append("genus: " + " ".join(str(p) for p in genus))
    return "\n".join(out) + "\n"
