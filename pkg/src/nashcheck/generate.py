"""Seeded random intersection matrices."""
from __future__ import annotations

import random
from fractions import Fraction

from .model import IntersectionMatrix


def _random_tree_edges(rng, n):
    # random labelled tree: attach each vertex to an earlier one, then shuffle labels
    labels = list(range(n))
    rng.shuffle(labels)
    return {tuple(sorted((labels[k], labels[rng.randrange(k)]))) for k in range(1, n)}


def generate_random(n: int, d=1, seed: int = 0) -> IntersectionMatrix:
    """A strictly diagonally dominant, connected, valid intersection matrix.

    Off-diagonal entries lie in ``{0, ..., floor(d)}``; a random spanning
    tree with entries >= 1 keeps the graph connected.  Each diagonal entry
    is minus the row's off-diagonal sum minus a random positive integer,
    so every row sum is negative and the matrix is negative definite.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    d = Fraction(d)
    if d <= 0:
        raise ValueError("d must be positive")
    top = max(1, int(d))
    rng = random.Random(seed)
    rows = [[0] * n for _ in range(n)]
    tree = _random_tree_edges(rng, n)
    for i in range(n):
        for j in range(i + 1, n):
            low = 1 if (i, j) in tree else 0
            rows[i][j] = rows[j][i] = rng.randint(low, top)
    for i in range(n):
        rows[i][i] = -sum(rows[i][j] for j in range(n) if j != i) - rng.randint(1, 3)
    return IntersectionMatrix(rows)
