"""Random valid intersection matrices for the property suites.

The package generator is strictly diagonally dominant, so every row sum
is negative and most interesting cases (zero or positive row sums,
FALSE cells) never show up.  Here the diagonal is the off-diagonal sum
plus a small shift in {-2,...,1}, and candidates are kept only if they
are negative definite.
"""
import random

import networkx as nx

from nashcheck.gauss import is_negative_definite
from nashcheck.linalg import SymMatrix
from nashcheck.model import IntersectionMatrix


def random_intersection_matrix(rng: random.Random, n_max=7, n_min=1):
    while True:
        n = rng.randint(n_min, n_max)
        order = list(range(n))
        rng.shuffle(order)
        edges = {tuple(sorted((order[k], order[rng.randrange(k)]))) for k in range(1, n)}
        for u in range(n):
            for v in range(u + 1, n):
                if rng.random() < 0.2:
                    edges.add((u, v))
        rows = [[0] * n for _ in range(n)]
        for u, v in edges:
            w = 2 if rng.random() < 0.05 else 1
            rows[u][v] = rows[v][u] = w
        for k in range(n):
            rows[k][k] = min(-2, -sum(rows[k]) + rng.randint(-2, 1))
        if is_negative_definite(SymMatrix(rows)):
            return IntersectionMatrix(rows)


def random_matrices(count, seed, n_max=7, n_min=1):
    rng = random.Random(seed)
    return [random_intersection_matrix(rng, n_max, n_min) for _ in range(count)]


def is_connected_subset(A, keep):
    G = nx.Graph()
    G.add_nodes_from(keep)
    G.add_edges_from((u, v) for u in keep for v in keep if u < v and A[u][v] != 0)
    return nx.is_connected(G)
