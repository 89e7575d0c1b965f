"""Acceptance criteria, one test per criterion.

Each test records a single PASS/FAIL line; conftest.py prints them at the
end of the run.  ``python tests/test_acceptance.py`` prints the same lines
without pytest.
"""
import itertools
import math
import random
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from expected import EXPECTED_NN, SANDWICH_FALSE_CELLS  # noqa: E402
from randmat import is_connected_subset, random_matrices  # noqa: E402

from nashcheck import (  # noqa: E402
    IntersectionMatrix,
    canonical_vector,
    NotNegativeDefiniteError,
    decide_pair,
    exact_determinant,
    is_nash_matrix,
    is_negative_definite,
    nn_matrix,
    principal_submatrix,
    schur_onto,
    star_condition,
    theorem_battery,
)
from nashcheck.fixtures import NAMED, chain, polygon_star, sandwich  # noqa: E402
from nashcheck.linalg import SymMatrix  # noqa: E402
from nashcheck.structure import branch_continued_fraction  # noqa: E402
from nashcheck.witness import cross_validate  # noqa: E402

RESULTS = {}


def record(number, title, ok, detail, seconds, limit):
    in_time = seconds < limit
    passed = ok and in_time
    line = f"{'PASS' if passed else 'FAIL'} criterion {number} ({title}): {detail}; {seconds:.2f}s (limit {limit}s)"
    RESULTS[number] = line
    print(line)
    return passed


# 1 -----------------------------------------------------------------------

def criterion_1():
    t0 = time.perf_counter()
    bad = []
    for name, text in EXPECTED_NN.items():
        got = nn_matrix(IntersectionMatrix(NAMED[name])).to_text()
        if got != text.lstrip():
            diff = [
                (r + 1, c + 1)
                for r, (g, e) in enumerate(zip(got.splitlines(), text.lstrip().splitlines()))
                for c, (x, y) in enumerate(zip(g.split(), e.split()))
                if x != y
            ]
            bad.append(f"{name} differs at {diff}")
    N = nn_matrix(IntersectionMatrix(sandwich(3)))
    if N.false_cells() != SANDWICH_FALSE_CELLS:
        got = [(i + 1, j + 1) for i, j in N.false_cells()]
        bad.append(f"sandwich a=3 FALSE cells {got}, expected [(1, 3)]")
    detail = "all fixtures exact" if not bad else "; ".join(bad)
    return record(1, "fixture exactness", not bad, detail, time.perf_counter() - t0, 1)


# 2 -----------------------------------------------------------------------

def criterion_2():
    t0 = time.perf_counter()
    bad = [f"A_{n}" for n in range(2, 11) if not is_nash_matrix(IntersectionMatrix(chain(n)))]
    bad += [k for k in ("D4", "E6", "E7", "E8") if is_nash_matrix(IntersectionMatrix(NAMED[k]))]
    detail = "A_2..A_10 Nash, D4/E6/E7/E8 not" if not bad else f"wrong verdicts: {bad}"
    return record(2, "ADE statements", not bad, detail, time.perf_counter() - t0, 1)


# 3 -----------------------------------------------------------------------

def criterion_3():
    t0 = time.perf_counter()
    bad = []
    cases = 0
    for k in range(3, 9):
        for m in range(math.ceil(k / 2), k + 3):
            cases += 1
            rows = polygon_star(k, -m)
            try:
                M = IntersectionMatrix(rows)
            except NotNegativeDefiniteError:
                M = None
            if (M is not None) != (2 * m > k):
                bad.append(f"k={k} r={-m}: validation {'ok' if M else 'failed'}")
                continue
            if M is not None and is_nash_matrix(M) != (2 * m > k + 1):
                bad.append(f"k={k} r={-m}: is_nash={is_nash_matrix(M)}")
    detail = f"{cases} stars consistent" if not bad else "; ".join(bad)
    return record(3, "polygon corollary sweep", not bad, detail, time.perf_counter() - t0, 5)


# 4 -----------------------------------------------------------------------

def criterion_4(bound=12):
    t0 = time.perf_counter()
    names = list(EXPECTED_NN) + ["sandwich_3"]
    per = {}
    for name in names:
        M = IntersectionMatrix(NAMED[name])
        report = cross_validate(M, canonical_vector(M), bound)
        per[name] = report.mismatches
    total = sum(per.values())
    detail = f"B={bound}, MISMATCH total {total}" + (
        "" if not total else " (" + ", ".join(f"{k}: {v}" for k, v in per.items() if v) + ")"
    )
    return record(4, "oracle concordance", total == 0, detail, time.perf_counter() - t0, 120)


# 5 -----------------------------------------------------------------------

def _separation(M):
    return all(decide_pair(M, i, j) or decide_pair(M, j, i) for i, j in itertools.combinations(range(M.n), 2))


def _order_independence(M, rng):
    if M.n < 3:
        return True
    keep = sorted(rng.sample(range(M.n), rng.randint(1, M.n - 1)))
    drop = [k for k in range(M.n) if k not in keep]
    reference = schur_onto(M, keep)
    for _ in range(5):
        order = drop[:]
        rng.shuffle(order)
        if schur_onto(M, keep, order) != reference:
            return False
    return True


def _pivot_minor(rng):
    n = rng.randint(1, 6)
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            rows[i][j] = rows[j][i] = rng.randint(-4, 2) if i == j else rng.randint(-2, 2)
    A = SymMatrix(rows)
    by_minors = all(
        (-1) ** k * exact_determinant(principal_submatrix(A, range(k))) > 0 for k in range(1, n + 1)
    )
    return is_negative_definite(A) == by_minors


def _ladder(M):
    levels = [star_condition(M, l) for l in range(1, M.n)]
    return all(not levels[l - 1] or levels[l - 2] for l in range(2, M.n))


def _heredity(M, rng):
    if not is_nash_matrix(M):
        return True
    for _ in range(3):
        size = rng.randint(1, M.n)
        keep = sorted(rng.sample(range(M.n), size))
        if is_connected_subset(M, keep) and not is_nash_matrix(principal_submatrix(M, keep)):
            return False
    k = rng.randrange(M.n)
    return is_nash_matrix(M.with_diagonal_entry(k, M[k][k] - 1))


def _consistency(M):
    nash = is_nash_matrix(M)
    return all(t.agrees_with(nash) for t in theorem_battery(M))


def criterion_5(count=500, seed=20240605):
    t0 = time.perf_counter()
    rng = random.Random(seed)
    mats = random_matrices(count, seed)
    failures = {key: 0 for key in "abcdef"}
    for M in mats:
        failures["a"] += not _separation(M)
        failures["b"] += not _order_independence(M, rng)
        failures["c"] += not _pivot_minor(rng)
        failures["d"] += not _ladder(M)
        failures["e"] += not _heredity(M, rng)
        failures["f"] += not _consistency(M)
    nash = sum(is_nash_matrix(M) for M in mats)
    ok = not any(failures.values())
    detail = f"{count} matrices ({nash} Nash), violations " + " ".join(f"{k}={v}" for k, v in failures.items())
    return record(5, "property suites", ok, detail, time.perf_counter() - t0, 300)


# 6 -----------------------------------------------------------------------

def criterion_6(count=200, seed=6):
    t0 = time.perf_counter()
    rng = random.Random(seed)
    bad = 0
    for _ in range(count):
        length = rng.randint(1, 6)
        diag = [-rng.randint(2, 6) for _ in range(length)]
        coup = [1] * (length - 1)
        # index 0 is the root-adjacent vertex, index length-1 the leaf
        A = SymMatrix(chain_rows(diag, coup))
        pivot = schur_onto(A, [0], elimination_order=list(range(length - 1, 0, -1)))[0][0]
        bad += branch_continued_fraction(diag, coup) != pivot
    detail = f"{count} chains, {bad} differences"
    return record(6, "continued fraction vs Schur pivot", bad == 0, detail, time.perf_counter() - t0, 1)


def chain_rows(diag, coup):
    n = len(diag)
    rows = [[0] * n for _ in range(n)]
    for k in range(n):
        rows[k][k] = diag[k]
    for k in range(n - 1):
        rows[k][k + 1] = rows[k + 1][k] = coup[k]
    return rows


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6]


@pytest.mark.parametrize("criterion", CRITERIA, ids=[f"criterion_{k}" for k in range(1, 7)])
def test_acceptance(criterion):
    assert criterion()


if __name__ == "__main__":
    outcomes = [c() for c in CRITERIA]
    sys.exit(0 if all(outcomes) else 1)
