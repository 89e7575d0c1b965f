"""Pure-Python witness search kernel.

Mirrors ``_witness_kernel.pyx`` line for line; used when the extension is
not built or when ``NASHCHECK_PURE_PYTHON`` is set.

Inputs are integers only: ``a`` is the row-major n*n system matrix
(negative diagonal, nonnegative off-diagonal), ``c`` the right-hand side.
The search looks for x in {1..bound}^n with a.x <= c and x[i] < x[j],
visiting candidates in lexicographic order.
"""


def _propagate(a, c, n, i, j, x, k, bound):
    # Raise lower bounds of the unfixed coordinates x[k:] until every
    # constraint is satisfied with the others at their bounds.  Every
    # constraint has the form x_r >= f(others) with f nondecreasing, so
    # raising is sound; a fixed coordinate that must grow means failure.
    lo = x[:k] + [1] * (n - k)
    changed = True
    while changed:
        changed = False
        for r in range(n):
            base = r * n
            s = -c[r]
            for t in range(n):
                if t != r:
                    s += a[base + t] * lo[t]
            req = 1
            if s > 0:
                d = -a[base + r]
                req = -(-s // d)
            if req > lo[r]:
                if r < k or req > bound:
                    return None
                lo[r] = req
                changed = True
        if lo[j] <= lo[i]:
            if j < k or lo[i] + 1 > bound:
                return None
            lo[j] = lo[i] + 1
            changed = True
    return lo


def _search_propagate(a, c, n, i, j, bound):
    x = [0] * n
    nodes = 0

    def rec(k):
        nonlocal nodes
        lo = _propagate(a, c, n, i, j, x, k, bound)
        if lo is None:
            return False
        if k == n:
            return True
        for v in range(lo[k], bound + 1):
            nodes += 1
            x[k] = v
            if rec(k + 1):
                return True
        x[k] = 0
        return False

    found = rec(0)
    return (list(x) if found else None), nodes


def _search_rows(a, c, n, i, j, bound):
    # lb[r]: value of row r with fixed coordinates at their values and
    # unfixed ones at the most favourable extreme (off-diagonal at 1,
    # diagonal at bound).  lb[r] > c[r] rules out the whole subtree.
    lb = [0] * n
    for r in range(n):
        base = r * n
        total = a[base + r] * bound
        for t in range(n):
            if t != r:
                total += a[base + t]
        lb[r] = total
    x = [0] * n
    nodes = 0

    def feasible_start():
        return all(lb[r] <= c[r] for r in range(n))

    def rec(k):
        nonlocal nodes
        if k == n:
            return True
        kk = k * n + k
        for v in range(1, bound + 1):
            nodes += 1
            if k == j and i < k and v <= x[i]:
                continue
            if k == i and j < k and v >= x[j]:
                break
            if k == i and j > k and v >= bound:
                break
            if k == j and i > k and v < 2:
                continue
            ok = True
            stop = False
            for r in range(n):
                if r == k:
                    delta = a[kk] * (v - bound)
                else:
                    delta = a[r * n + k] * (v - 1)
                lb[r] += delta
            for r in range(n):
                if lb[r] > c[r]:
                    ok = False
                    if r != k:
                        stop = True
                    break
            if ok:
                x[k] = v
                if rec(k + 1):
                    return True
                x[k] = 0
            for r in range(n):
                if r == k:
                    lb[r] -= a[kk] * (v - bound)
                else:
                    lb[r] -= a[r * n + k] * (v - 1)
            if stop:
                break
        return False

    if not feasible_start():
        return None, 0
    found = rec(0)
    return (list(x) if found else None), nodes


def search(a, c, n, i, j, bound, propagate=True):
    """Return ``(solution or None, nodes_visited)``."""
    if propagate:
        return _search_propagate(a, c, n, i, j, bound)
    return _search_rows(a, c, n, i, j, bound)
