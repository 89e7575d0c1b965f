from fractions import Fraction as F

import pytest

from nashcheck.engine import is_nash_matrix
from nashcheck.generate import generate_random
from nashcheck.model import IntersectionMatrix, format_matrix_file, parse_matrix_file


def test_single_curve():
    M = generate_random(1, 1, seed=4)
    assert M.n == 1 and M[0][0] <= -1


def test_deterministic():
    assert generate_random(6, 2, seed=9) == generate_random(6, 2, seed=9)
    assert generate_random(6, 2, seed=9) != generate_random(6, 2, seed=10)


def test_entries_bounded():
    M = generate_random(7, F(5, 2), seed=1)
    off = [M[i][j] for i in range(7) for j in range(7) if i != j]
    assert all(0 <= v <= 2 for v in off)


def test_bad_arguments():
    with pytest.raises(ValueError):
        generate_random(0)
    with pytest.raises(ValueError):
        generate_random(3, 0)


def test_strictly_dominant_hence_nash():
    # every row sum is negative, so all pairs hold
    for seed in range(50):
        assert is_nash_matrix(generate_random(5, 2, seed))


def test_smoke_ten_thousand():
    for seed in range(10_000):
        n = 1 + seed % 7
        M = generate_random(n, 1 + seed % 3, seed)
        assert isinstance(M, IntersectionMatrix)
        if seed % 500 == 0:
            again, _ = parse_matrix_file(format_matrix_file(M))
            assert again == M
