import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from randmat import random_intersection_matrix

from nashcheck import witness as wmod
from nashcheck.engine import decide_pair
from nashcheck.fixtures import D4, E6, LIKE_STAR_10, NAMED
from nashcheck.model import IntersectionMatrix, canonical_vector
from nashcheck.witness import (
    PairStatus,
    Witness,
    cross_validate,
    integer_system,
    search_witness,
    verify_witness,
)

D = IntersectionMatrix(D4)
Z4 = (0, 0, 0, 0)
BACKENDS = ["python"] + (["cython"] if wmod.BACKEND == "cython" else [])


def brute_force(A, C, i, j, bound):
    """Plain enumeration in lexicographic order; shares no code with the kernels."""
    n = A.n
    for x in itertools.product(range(1, bound + 1), repeat=n):
        if x[i] < x[j] and all(sum(A[r][t] * x[t] for t in range(n)) <= C[r] for r in range(n)):
            return x
    return None


def test_verify_examples():
    assert verify_witness(D, Z4, Witness((2, 1, 1, 1), (1, 0)))
    assert not verify_witness(D, Z4, Witness((1, 1, 1, 1), (0, 1)))
    assert not verify_witness(D, Z4, Witness((0, 1, 1, 1), (1, 0)))
    with pytest.raises(ValueError):
        verify_witness(D, Z4, Witness((1, 1), (1, 0)))


@pytest.mark.parametrize("backend", BACKENDS)
@pytest.mark.parametrize("pruning", ["propagate", "rows"])
def test_search_examples(backend, pruning):
    assert search_witness(D, Z4, 1, 0, 3, pruning, backend).x == (2, 1, 1, 1)
    assert search_witness(D, Z4, 0, 1, 12, pruning, backend) is None
    A2 = IntersectionMatrix([[-2, 1], [1, -2]])
    assert search_witness(A2, (0, 0), 0, 1, 3, pruning, backend).x == (1, 2)


def test_search_argument_checks():
    with pytest.raises(ValueError):
        search_witness(D, Z4, 1, 0, 0)
    with pytest.raises(ValueError):
        search_witness(D, Z4, 1, 1)
    with pytest.raises(ValueError):
        search_witness(D, Z4, 1, 0, pruning="none")
    with pytest.raises(ValueError):
        search_witness(D, Z4, 1, 0, backend="fortran")


def test_cross_validate_d4():
    report = cross_validate(D, Z4, 8)
    assert (report.confirmed, report.consistent_false, report.mismatches) == (9, 3, 0)
    assert report.ok


def test_cross_validate_e6():
    A = IntersectionMatrix(E6)
    assert cross_validate(A, canonical_vector(A), 12).mismatches == 0


def test_cross_validate_single_curve():
    report = cross_validate(IntersectionMatrix([[-2]]), (0,), 12)
    assert report.checks == [] and report.to_json()["pairs"] == []


def test_report_json():
    data = cross_validate(D, Z4, 8).to_json()
    assert data["bound"] == 8 and data["confirmed"] == 9
    first = data["pairs"][0]
    assert first == {"pair": [1, 2], "verdict": False, "status": "consistent_false", "witness": None}


def test_small_bound_gives_mismatch():
    report = cross_validate(D, Z4, 1)
    assert report.mismatches == 9 and not report.ok


@pytest.mark.parametrize("name", sorted(set(NAMED) - {"generalized_cycle_8"}))
def test_all_fixtures_concordant_with_larger_bound(name):
    A = IntersectionMatrix(NAMED[name])
    report = cross_validate(A, canonical_vector(A), 64)
    assert report.mismatches == 0 and report.contradictions == 0


def test_published_cell_is_refuted():
    # the published table marks (3,7) of this example TRUE; no witness exists
    A = IntersectionMatrix(LIKE_STAR_10)
    assert not decide_pair(A, 2, 6)
    assert search_witness(A, canonical_vector(A), 2, 6, bound=5000) is None
    assert search_witness(A, (0,) * 10, 2, 6, bound=5000) is None


def test_integer_system_scales_rows():
    from fractions import Fraction as F

    A = IntersectionMatrix([[F(-5, 2), 1], [1, F(-4, 3)]])
    flat, rhs = integer_system(A, (F(-1, 3), 0))
    assert flat == [-15, 6, 3, -4] and rhs == [-2, 0]


def _rand(seed, n_max=5):
    return random_intersection_matrix(random.Random(seed), n_max=n_max, n_min=2)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.integers(0, 1))
def test_kernels_match_brute_force(seed, use_canonical):
    A = _rand(seed, n_max=4)
    C = canonical_vector(A) if use_canonical else (0,) * A.n
    bound = 5
    for i, j in itertools.permutations(range(A.n), 2):
        expected = brute_force(A, C, i, j, bound)
        for backend in BACKENDS:
            for pruning in ("propagate", "rows"):
                w = search_witness(A, C, i, j, bound, pruning, backend)
                assert (w.x if w else None) == expected


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10**6))
def test_backends_and_prunings_agree(seed):
    A = _rand(seed, n_max=6)
    C = canonical_vector(A)
    for i, j in itertools.permutations(range(A.n), 2):
        found = {
            (b, p): search_witness(A, C, i, j, 10, p, b)
            for b in BACKENDS
            for p in ("propagate", "rows")
        }
        assert len({w.x if w else None for w in found.values()}) == 1


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10**6))
def test_no_contradictions(seed):
    A = _rand(seed, n_max=6)
    assert cross_validate(A, canonical_vector(A), 10).contradictions == 0


def test_overflow_falls_back_to_python():
    A = IntersectionMatrix([[-(10**18), 1], [1, -(10**18)]])
    w = search_witness(A, (0, 0), 0, 1, 3, backend=BACKENDS[-1])
    assert w.x == (1, 2)


def test_pair_status_values():
    assert {s.value for s in PairStatus} == {"confirmed_true", "consistent_false", "mismatch", "contradiction"}


def test_pure_python_fallback_selected_by_env():
    import os
    import subprocess
    import sys

    env = dict(os.environ, NASHCHECK_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "from nashcheck import witness; print(witness.BACKEND)"],
        capture_output=True, text=True, env=env, check=True,
    )
    assert out.stdout.strip() == "python"
