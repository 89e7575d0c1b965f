"""Graph shapes and the structural theorems built on them.

Each ``thm_*`` function returns a :class:`StructuralVerdict`.  A verdict of
NN_TRUE or NN_FALSE is a claim about :func:`~nashcheck.engine.is_nash_matrix`
and must agree with it; INCONCLUSIVE means the theorem's hypotheses fail or
it only gives a one-sided condition that did not fire.

Vertex labels in evidence strings are 1-based (``E1, E2, ...``).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from typing import Sequence

import networkx as nx

from .errors import ZeroPivotError
from .gauss import row_sums
from .linalg import SymMatrix
from .model import dual_graph

__all__ = [
    "Verdict",
    "StructuralVerdict",
    "StarShape",
    "GraphClassification",
    "classify",
    "classify_matrix",
    "branch_continued_fraction",
    "branch_chain",
    "thm_leaf_necessary",
    "thm_tree",
    "thm_cycle",
    "cor_generalized_cycle",
    "thm_mixed",
    "thm_polygon",
    "cor_polygon_minus2",
    "thm_like_star",
    "quick_criteria",
    "theorem_battery",
]


class Verdict(enum.Enum):
    NN_TRUE = "nn_true"
    NN_FALSE = "nn_false"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class StructuralVerdict:
    theorem_id: str
    applicable: bool
    verdict: Verdict
    evidence: tuple = ()

    def __post_init__(self):
        if not self.applicable and self.verdict is not Verdict.INCONCLUSIVE:
            raise ValueError("an inapplicable theorem cannot decide")

    @property
    def decided(self):
        return self.verdict is not Verdict.INCONCLUSIVE

    def agrees_with(self, is_nash: bool) -> bool:
        if not self.decided:
            return True
        return (self.verdict is Verdict.NN_TRUE) == is_nash

    def to_json(self):
        return {
            "id": self.theorem_id,
            "applicable": self.applicable,
            "verdict": self.verdict.value,
            "evidence": list(self.evidence),
        }


@dataclass(frozen=True)
class StarShape:
    root: int
    branches: tuple  # each branch lists its vertices from the root outward


@dataclass(frozen=True)
class GraphClassification:
    n: int
    leaves: frozenset
    is_tree: bool
    is_cycle: bool
    is_generalized_cycle: bool
    star_shape: StarShape | None
    polygon_root: int | None
    generalized_cycle_subgraphs: tuple
    leaf_generalized_cycles: tuple
    multi_edges: tuple


def _label(k):
    return f"E{k + 1}"


def classify(G: nx.Graph) -> GraphClassification:
    """Shape data for a connected dual graph with vertices ``0..n-1``."""
    n = G.number_of_nodes()
    degree = dict(G.degree())
    leaves = frozenset(v for v, d in degree.items() if d == 1)
    is_tree = nx.is_tree(G)
    is_cycle = n >= 3 and nx.is_connected(G) and all(d == 2 for d in degree.values())
    is_gc = n >= 3 and nx.is_biconnected(G)

    blocks = sorted(
        (frozenset(b) for b in nx.biconnected_components(G) if len(b) >= 3),
        key=lambda b: sorted(b),
    )
    leaf_blocks = []
    for block in blocks:
        attachments = {v for v in block if any(u not in block for u in G[v])}
        if len(attachments) <= 1 and len(block) < n:
            leaf_blocks.append(block)

    star = None
    polygon_root = None
    if is_tree:
        hubs = [v for v, d in degree.items() if d >= 3]
        if len(hubs) == 1:
            root = hubs[0]
            branches = []
            for first in sorted(G[root]):
                branch, prev, cur = [first], root, first
                while degree[cur] == 2:
                    nxt = next(u for u in G[cur] if u != prev)
                    branch.append(nxt)
                    prev, cur = cur, nxt
                branches.append(tuple(branch))
            star = StarShape(root, tuple(branches))
        if n >= 3:
            centers = [v for v, d in degree.items() if d == n - 1]
            if centers:
                polygon_root = centers[0]

    multi = tuple(
        sorted((min(u, v), max(u, v)) for u, v, w in G.edges(data="weight", default=1) if w >= 2)
    )
    return GraphClassification(
        n=n,
        leaves=leaves,
        is_tree=is_tree,
        is_cycle=is_cycle,
        is_generalized_cycle=is_gc,
        star_shape=star,
        polygon_root=polygon_root,
        generalized_cycle_subgraphs=tuple(blocks),
        leaf_generalized_cycles=tuple(leaf_blocks),
        multi_edges=multi,
    )


def classify_matrix(A: SymMatrix) -> GraphClassification:
    return classify(dual_graph(A))


def branch_continued_fraction(diagonals: Sequence, couplings: Sequence) -> Fraction:
    """``d1 - c1^2 / (d2 - c2^2 / (d3 - ...))`` evaluated exactly.

    ``diagonals[0]`` is the vertex next to the root and ``couplings[k]``
    joins ``diagonals[k]`` to ``diagonals[k + 1]``.
    """
    if not diagonals:
        raise ValueError("a branch needs at least one vertex")
    if len(couplings) != len(diagonals) - 1:
        raise ValueError("need exactly one coupling between consecutive vertices")
    value = Fraction(diagonals[-1])
    for d, c in zip(reversed(diagonals[:-1]), reversed(couplings)):
        if value == 0:
            raise ZeroPivotError("zero denominator in continued fraction")
        value = Fraction(d) - Fraction(c) ** 2 / value
    return value


def branch_chain(A: SymMatrix, branch: Sequence[int]):
    """Diagonals and couplings of a branch, listed from the root outward."""
    diagonals = [A[v][v] for v in branch]
    couplings = [A[u][v] for u, v in zip(branch, branch[1:])]
    return diagonals, couplings


def _rowsum_facts(A):
    sums = row_sums(A)
    positive = [k for k, s in enumerate(sums) if s > 0]
    strict = [k for k, s in enumerate(sums) if s < 0]
    return sums, positive, strict


def _na(theorem_id, reason):
    return StructuralVerdict(theorem_id, False, Verdict.INCONCLUSIVE, (reason,))


def thm_leaf_necessary(A: SymMatrix, cls: GraphClassification | None = None) -> StructuralVerdict:
    """A Nash matrix has a negative row sum at every leaf."""
    cls = cls or classify_matrix(A)
    sums = row_sums(A)
    bad = [k for k in sorted(cls.leaves) if sums[k] >= 0]
    if bad:
        evidence = tuple(f"leaf {_label(k)} has row sum {sums[k]} >= 0" for k in bad)
        return StructuralVerdict("leaf_necessary", True, Verdict.NN_FALSE, evidence)
    evidence = tuple(f"leaf {_label(k)} has row sum {sums[k]} < 0" for k in sorted(cls.leaves))
    return StructuralVerdict("leaf_necessary", True, Verdict.INCONCLUSIVE, evidence or ("no leaves",))


def thm_tree(A: SymMatrix, cls: GraphClassification | None = None) -> StructuralVerdict:
    cls = cls or classify_matrix(A)
    if A.n < 2 or not cls.is_tree:
        return _na("tree", "graph is not a tree with at least two vertices")
    sums, positive, _ = _rowsum_facts(A)
    if positive:
        return _na("tree", "; ".join(f"row sum of {_label(k)} is {sums[k]} > 0" for k in positive))
    bad = [k for k in sorted(cls.leaves) if sums[k] >= 0]
    if bad:
        ev = tuple(f"leaf {_label(k)} has row sum {sums[k]}, not < 0" for k in bad)
        return StructuralVerdict("tree", True, Verdict.NN_FALSE, ev)
    ev = ("all row sums <= 0",) + tuple(f"leaf {_label(k)} row sum {sums[k]} < 0" for k in sorted(cls.leaves))
    return StructuralVerdict("tree", True, Verdict.NN_TRUE, ev)


def _two_strict(theorem_id, A):
    sums, positive, strict = _rowsum_facts(A)
    if positive:
        return _na(theorem_id, "; ".join(f"row sum of {_label(k)} is {sums[k]} > 0" for k in positive))
    ev = (f"vertices with negative row sum: {', '.join(_label(k) for k in strict) or 'none'}",)
    verdict = Verdict.NN_TRUE if len(strict) >= 2 else Verdict.NN_FALSE
    return StructuralVerdict(theorem_id, True, verdict, ev)


def thm_cycle(A: SymMatrix, cls: GraphClassification | None = None) -> StructuralVerdict:
    cls = cls or classify_matrix(A)
    if not cls.is_cycle:
        return _na("cycle", "graph is not a cycle on >= 3 vertices")
    return _two_strict("cycle", A)


def cor_generalized_cycle(A: SymMatrix, cls: GraphClassification | None = None) -> StructuralVerdict:
    cls = cls or classify_matrix(A)
    if not cls.is_generalized_cycle:
        return _na("generalized_cycle", "graph is not 2-connected on >= 3 vertices")
    return _two_strict("generalized_cycle", A)


def thm_mixed(A: SymMatrix, cls: GraphClassification | None = None) -> StructuralVerdict:
    """Graphs that are not generalized cycles, all row sums <= 0, leaves strict.

    Then N is all true iff every generalized cycle hanging off the rest of
    the graph by a single vertex has a negative row sum at some vertex
    other than that attachment vertex.  Blocks with two or more attachment
    vertices impose nothing: strictness reaches them from both sides.
    """
    cls = cls or classify_matrix(A)
    if A.n < 3 or cls.is_generalized_cycle:
        return _na("mixed", "needs n >= 3 and a graph that is not a generalized cycle")
    sums, positive, _ = _rowsum_facts(A)
    if positive:
        return _na("mixed", "; ".join(f"row sum of {_label(k)} is {sums[k]} > 0" for k in positive))
    weak_leaves = [k for k in sorted(cls.leaves) if sums[k] >= 0]
    if weak_leaves:
        return _na("mixed", "; ".join(f"leaf {_label(k)} has row sum {sums[k]}, not < 0" for k in weak_leaves))
    G = dual_graph(A)
    evidence, verdict = [], Verdict.NN_TRUE
    for block in cls.leaf_generalized_cycles:
        interior = sorted(v for v in block if all(u in block for u in G[v]))
        names = "{" + ", ".join(_label(v) for v in sorted(block)) + "}"
        strict = [v for v in interior if sums[v] < 0]
        if strict:
            evidence.append(f"leaf cycle {names}: interior {_label(strict[0])} has row sum {sums[strict[0]]} < 0")
        else:
            verdict = Verdict.NN_FALSE
            evidence.append(f"leaf cycle {names}: no interior vertex with negative row sum")
    if not evidence:
        evidence.append("no generalized cycle hangs off a single vertex")
    return StructuralVerdict("mixed", True, verdict, tuple(evidence))


def _polygon_data(A, cls):
    root = cls.polygon_root
    leaves = [k for k in range(A.n) if k != root]
    delta = A[root][root] - sum((A[i][root] ** 2 / A[i][i] for i in leaves), Fraction(0))
    return root, leaves, delta


def thm_polygon(A: SymMatrix, cls: GraphClassification | None = None) -> StructuralVerdict:
    cls = cls or classify_matrix(A)
    if cls.polygon_root is None:
        return _na("polygon", "graph is not a star whose non-root vertices are all leaves")
    root, leaves, delta = _polygon_data(A, cls)
    r = root
    failures = []
    for i in leaves:
        value = A[i][i] + A[i][r]
        if not value < 0:
            failures.append(f"a_{i + 1},{i + 1} + a_{i + 1},{r + 1} = {value}, not < 0")
    for i, j in permutations(leaves, 2):
        value = A[i][i] * A[j][j] * delta + A[j][r] * (A[i][i] * A[j][r] - A[j][j] * A[i][r])
        if not value < 0:
            failures.append(f"pair ({_label(i)},{_label(j)}): {value}, not < 0")
    for i in leaves:
        value = A[i][r] / A[i][i] * (A[i][i] + A[i][r]) + delta
        if not value < 0:
            failures.append(f"root against {_label(i)}: {value}, not < 0")
    head = f"root {_label(r)}, delta = {delta}"
    if failures:
        return StructuralVerdict("polygon", True, Verdict.NN_FALSE, (head, *failures))
    return StructuralVerdict("polygon", True, Verdict.NN_TRUE, (head, "all three inequality families hold"))


def cor_polygon_minus2(A: SymMatrix, cls: GraphClassification | None = None) -> StructuralVerdict:
    cls = cls or classify_matrix(A)
    r = cls.polygon_root
    if r is None:
        return _na("polygon_minus2", "graph is not a polygon star")
    leaves = [k for k in range(A.n) if k != r]
    if any(A[i][i] != -2 or A[i][r] != 1 for i in leaves):
        return _na("polygon_minus2", "some leaf is not a (-2)-curve joined by a single edge")
    threshold = Fraction(A.n, 2)
    holds = -A[r][r] > threshold
    ev = (f"-a_{r + 1},{r + 1} = {-A[r][r]} {'>' if holds else '<='} n/2 = {threshold}",)
    return StructuralVerdict("polygon_minus2", True, Verdict.NN_TRUE if holds else Verdict.NN_FALSE, ev)


def thm_like_star(A: SymMatrix, cls: GraphClassification | None = None) -> StructuralVerdict:
    """Sufficient condition for stars of chains with at least three branches."""
    cls = cls or classify_matrix(A)
    star = cls.star_shape
    if star is None or len(star.branches) < 3:
        return _na("like_star", "graph is not a star of chains with >= 3 branches")
    root = star.root
    sums = row_sums(A)
    qs = [branch_continued_fraction(*branch_chain(A, b)) for b in star.branches]
    couplings = [A[root][b[0]] for b in star.branches]
    evidence = [f"root {_label(root)}; q = ({', '.join(str(q) for q in qs)})"]
    failed = False
    for k in sorted(cls.leaves):
        if not sums[k] < 0:
            failed = True
            evidence.append(f"leaf {_label(k)} has row sum {sums[k]}, not < 0")
    for k in range(A.n):
        if k != root and sums[k] > 0:
            failed = True
            evidence.append(f"row sum of {_label(k)} is {sums[k]} > 0")
    for i, j in combinations(range(len(qs)), 2):
        value = A[root][root] + couplings[i] + couplings[j] - sum(
            (couplings[k] ** 2 / qs[k] for k in range(len(qs)) if k not in (i, j)), Fraction(0)
        )
        if value > 0:
            failed = True
            evidence.append(f"branches {i + 1},{j + 1}: contracted root row sum {value} > 0")
    if failed:
        return StructuralVerdict("like_star", True, Verdict.INCONCLUSIVE, tuple(evidence))
    evidence.append("all conditions hold")
    return StructuralVerdict("like_star", True, Verdict.NN_TRUE, tuple(evidence))


def quick_criteria(A: SymMatrix) -> list[StructuralVerdict]:
    """Two cheap sufficient tests: a diagonal-versus-coupling bound, and the n = 3 test."""
    n = A.n
    out = []
    if n >= 2:
        m = min(-A[i][i] for i in range(n))
        d = max(A[i][j] for i in range(n) for j in range(n) if i != j)
        fires = m > (n - 1) * d
        ev = (f"m = {m}, (n-1)d = {(n - 1) * d}",)
        out.append(StructuralVerdict("rowsum_bound", True, Verdict.NN_TRUE if fires else Verdict.INCONCLUSIVE, ev))
    else:
        out.append(_na("rowsum_bound", "needs n >= 2"))
    if n == 3:
        ev, fires = [], True
        for k in range(3):
            i, j = [t for t in range(3) if t != k]
            lhs = A[k][i] * A[k][j] - A[i][j] * A[k][k]
            rhs = min(-A[k][i] ** 2 + A[i][i] * A[k][k], -A[k][j] ** 2 + A[j][j] * A[k][k])
            ok = lhs < rhs
            fires &= ok
            ev.append(f"k={k + 1}: {lhs} {'<' if ok else '>='} {rhs}")
        out.append(StructuralVerdict("three_curves", True, Verdict.NN_TRUE if fires else Verdict.INCONCLUSIVE, tuple(ev)))
    else:
        out.append(_na("three_curves", "needs n = 3"))
    return out


def theorem_battery(A: SymMatrix) -> list[StructuralVerdict]:
    cls = classify_matrix(A)
    return [
        thm_leaf_necessary(A, cls),
        thm_tree(A, cls),
        thm_cycle(A, cls),
        cor_generalized_cycle(A, cls),
        thm_mixed(A, cls),
        thm_polygon(A, cls),
        cor_polygon_minus2(A, cls),
        thm_like_star(A, cls),
        *quick_criteria(A),
    ]
