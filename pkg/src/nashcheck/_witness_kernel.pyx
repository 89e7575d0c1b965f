# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled witness search kernel; same algorithm as ``_witness_py``.

The caller guarantees every intermediate row value fits in a signed
64-bit integer (see ``witness._fits_int64``).
"""
from libc.stdlib cimport malloc, free

ctypedef long long i64


cdef struct Problem:
    i64* a
    i64* c
    i64* x
    i64* lb
    int n
    int i
    int j
    i64 bound
    i64 nodes


cdef inline i64 ceil_div(i64 num, i64 den):
    # num > 0, den > 0
    return (num + den - 1) // den


cdef bint propagate(Problem* p, i64* lo, int k):
    cdef int n = p.n
    cdef int r, t
    cdef i64 s, req
    cdef bint changed = True
    for r in range(n):
        lo[r] = p.x[r] if r < k else 1
    while changed:
        changed = False
        for r in range(n):
            s = -p.c[r]
            for t in range(n):
                if t != r:
                    s += p.a[r * n + t] * lo[t]
            req = 1
            if s > 0:
                req = ceil_div(s, -p.a[r * n + r])
            if req > lo[r]:
                if r < k or req > p.bound:
                    return False
                lo[r] = req
                changed = True
        if lo[p.j] <= lo[p.i]:
            if p.j < k or lo[p.i] + 1 > p.bound:
                return False
            lo[p.j] = lo[p.i] + 1
            changed = True
    return True


cdef bint rec_propagate(Problem* p, int k):
    cdef i64* lo = <i64*> malloc(p.n * sizeof(i64))
    cdef i64 v, start
    cdef bint ok
    if lo == NULL:
        raise MemoryError()
    try:
        ok = propagate(p, lo, k)
        if not ok:
            return False
        if k == p.n:
            return True
        start = lo[k]
    finally:
        free(lo)
    v = start
    while v <= p.bound:
        p.nodes += 1
        p.x[k] = v
        if rec_propagate(p, k + 1):
            return True
        v += 1
    p.x[k] = 0
    return False


cdef bint rec_rows(Problem* p, int k):
    cdef int n = p.n
    cdef int r
    cdef i64 v, delta
    cdef bint ok, stop
    cdef int kk = k * n + k
    if k == n:
        return True
    v = 1
    while v <= p.bound:
        p.nodes += 1
        if k == p.j and p.i < k and v <= p.x[p.i]:
            v += 1
            continue
        if k == p.i and p.j < k and v >= p.x[p.j]:
            break
        if k == p.i and p.j > k and v >= p.bound:
            break
        if k == p.j and p.i > k and v < 2:
            v += 1
            continue
        ok = True
        stop = False
        for r in range(n):
            if r == k:
                delta = p.a[kk] * (v - p.bound)
            else:
                delta = p.a[r * n + k] * (v - 1)
            p.lb[r] += delta
        for r in range(n):
            if p.lb[r] > p.c[r]:
                ok = False
                if r != k:
                    stop = True
                break
        if ok:
            p.x[k] = v
            if rec_rows(p, k + 1):
                return True
            p.x[k] = 0
        for r in range(n):
            if r == k:
                p.lb[r] -= p.a[kk] * (v - p.bound)
            else:
                p.lb[r] -= p.a[r * n + k] * (v - 1)
        if stop:
            break
        v += 1
    return False


def search(a, c, int n, int i, int j, i64 bound, bint propagate=True):
    """Return ``(solution or None, nodes_visited)``."""
    cdef Problem p
    cdef int r, t
    cdef bint found
    cdef i64 total
    p.n = n
    p.i = i
    p.j = j
    p.bound = bound
    p.nodes = 0
    p.a = <i64*> malloc(n * n * sizeof(i64))
    p.c = <i64*> malloc(n * sizeof(i64))
    p.x = <i64*> malloc(n * sizeof(i64))
    p.lb = <i64*> malloc(n * sizeof(i64))
    if p.a == NULL or p.c == NULL or p.x == NULL or p.lb == NULL:
        free(p.a); free(p.c); free(p.x); free(p.lb)
        raise MemoryError()
    try:
        for r in range(n * n):
            p.a[r] = a[r]
        for r in range(n):
            p.c[r] = c[r]
            p.x[r] = 0
        if propagate:
            found = rec_propagate(&p, 0)
        else:
            found = True
            for r in range(n):
                total = p.a[r * n + r] * bound
                for t in range(n):
                    if t != r:
                        total += p.a[r * n + t]
                p.lb[r] = total
                if total > p.c[r]:
                    found = False
            if not found:
                return None, 0
            found = rec_rows(&p, 0)
        if found:
            return [p.x[r] for r in range(n)], p.nodes
        return None, p.nodes
    finally:
        free(p.a); free(p.c); free(p.x); free(p.lb)
