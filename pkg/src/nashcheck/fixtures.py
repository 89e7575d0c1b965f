"""Intersection matrices of classical and worked examples, as integer rows.

Indices follow the usual numbering of each example, shifted to 0-based.
"""


def chain(n, self_intersection=-2):
    """The A_n chain: ``self_intersection`` on the diagonal, 1 between neighbours."""
    return [[self_intersection if i == j else (1 if abs(i - j) == 1 else 0) for j in range(n)] for i in range(n)]


def polygon_star(leaves, root, leaf=-2, edge=1):
    """Star with ``leaves`` pendant curves; the root is the last index."""
    n = leaves + 1
    rows = [[0] * n for _ in range(n)]
    for i in range(leaves):
        rows[i][i] = leaf
        rows[i][-1] = rows[-1][i] = edge
    rows[-1][-1] = root
    return rows


def sandwich(a):
    return [[-a, 0, 1, 0], [0, -2, 1, 0], [1, 1, -2, 1], [0, 0, 1, -2]]


D4 = [
    [-2, 1, 1, 1],
    [1, -2, 0, 0],
    [1, 0, -2, 0],
    [1, 0, 0, -2],
]

E6 = [
    [-2, 1, 0, 0, 0, 0],
    [1, -2, 1, 0, 0, 0],
    [0, 1, -2, 1, 0, 1],
    [0, 0, 1, -2, 1, 0],
    [0, 0, 0, 1, -2, 0],
    [0, 0, 1, 0, 0, -2],
]

E7 = [
    [-2, 1, 0, 0, 0, 0, 0],
    [1, -2, 1, 0, 0, 0, 0],
    [0, 1, -2, 1, 0, 0, 1],
    [0, 0, 1, -2, 1, 0, 0],
    [0, 0, 0, 1, -2, 1, 0],
    [0, 0, 0, 0, 1, -2, 0],
    [0, 0, 1, 0, 0, 0, -2],
]

E8 = [
    [-2, 1, 0, 0, 0, 0, 0, 0],
    [1, -2, 1, 0, 0, 0, 0, 0],
    [0, 1, -2, 1, 0, 0, 0, 1],
    [0, 0, 1, -2, 1, 0, 0, 0],
    [0, 0, 0, 1, -2, 1, 0, 0],
    [0, 0, 0, 0, 1, -2, 1, 0],
    [0, 0, 0, 0, 0, 1, -2, 0],
    [0, 0, 1, 0, 0, 0, 0, -2],
]

# star of chains, root -3 at index 2, four branches; not Nash
LIKE_STAR_10 = [
    [-2, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, -2, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, -3, 1, 0, 1, 0, 0, 1, 0],
    [0, 0, 1, -2, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, -2, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, -2, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, -2, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, -2, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 0, -2, 1],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, -2],
]

# star of chains, root -3 at index 1; only (2,1) fails
LIKE_STAR_9 = [
    [-2, 1, 0, 0, 0, 0, 0, 0, 0],
    [1, -3, 1, 0, 0, 1, 0, 1, 0],
    [0, 1, -2, 1, 0, 0, 0, 0, 0],
    [0, 0, 1, -2, 1, 0, 0, 0, 0],
    [0, 0, 0, 1, -2, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, -2, 1, 0, 0],
    [0, 0, 0, 0, 0, 1, -2, 0, 0],
    [0, 1, 0, 0, 0, 0, 0, -2, 1],
    [0, 0, 0, 0, 0, 0, 0, 1, -2],
]

# star of chains, root -3 at index 1; Nash
LIKE_STAR_8 = [
    [-2, 1, 0, 0, 0, 0, 0, 0],
    [1, -3, 1, 0, 0, 1, 0, 1],
    [0, 1, -2, 1, 0, 0, 0, 0],
    [0, 0, 1, -2, 1, 0, 0, 0],
    [0, 0, 0, 1, -2, 0, 0, 0],
    [0, 1, 0, 0, 0, -2, 1, 0],
    [0, 0, 0, 0, 0, 1, -2, 0],
    [0, 1, 0, 0, 0, 0, 0, -2],
]

# tree with a positive row sum that is nevertheless Nash
TREE_8 = [
    [-2, 1, 0, 0, 0, 0, 0, 0],
    [1, -3, 1, 0, 1, 0, 0, 0],
    [0, 1, -2, 0, 0, 0, 0, 0],
    [0, 0, 0, -2, 1, 0, 0, 0],
    [0, 1, 0, 1, -3, 1, 0, 1],
    [0, 0, 0, 0, 1, -2, 1, 0],
    [0, 0, 0, 0, 0, 1, -2, 0],
    [0, 0, 0, 0, 1, 0, 0, -2],
]

# 2-connected graph: K4 core with four subdivided outer edges
GENERALIZED_CYCLE_8 = [
    [-5, 1, 1, 1, 1, 1, 0, 0],
    [1, -6, 1, 1, 0, 1, 1, 0],
    [1, 1, -5, 1, 0, 0, 1, 1],
    [1, 1, 1, -5, 1, 0, 0, 1],
    [1, 0, 0, 1, -2, 0, 0, 0],
    [1, 1, 0, 0, 0, -2, 0, 0],
    [0, 1, 1, 0, 0, 0, -2, 0],
    [0, 0, 1, 1, 0, 0, 0, -3],
]

NAMED = {
    "D4": D4,
    "E6": E6,
    "E7": E7,
    "E8": E8,
    "like_star_10": LIKE_STAR_10,
    "like_star_9": LIKE_STAR_9,
    "like_star_8": LIKE_STAR_8,
    "tree_8": TREE_8,
    "sandwich_3": sandwich(3),
    "generalized_cycle_8": GENERALIZED_CYCLE_8,
}
