# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled arithmetic kernels for Z[zeta].

Same contract as ``_pykernels``.  Multiplication takes a C ``long long`` path
when every coordinate fits in 28 bits (r <= 64 keeps the accumulators below
2**63) and falls back to Python integers otherwise.
"""

from math import gcd

DEF SMALL = 1 << 28
DEF MAXR = 64


cdef inline bint _small(tuple a):
    cdef object c
    for c in a:
        if not (-SMALL < c < SMALL):
            return False
    return True


def cyc_mul(tuple a, tuple b, int r):
    cdef long long acc[MAXR]
    cdef long long av[MAXR]
    cdef long long bv[MAXR]
    cdef int i, j, k, n = r - 1
    cdef long long top
    if len(a) != n or len(b) != n:
        raise ValueError(f"expected coordinate tuples of length {n}")
    if r <= MAXR and _small(a) and _small(b):
        for i in range(n):
            av[i] = a[i]
            bv[i] = b[i]
        for i in range(r):
            acc[i] = 0
        for i in range(n):
            if av[i] != 0:
                for j in range(n):
                    k = i + j
                    if k >= r:
                        k -= r
                    acc[k] += av[i] * bv[j]
        top = acc[r - 1]
        return tuple([acc[i] - top for i in range(n)])
    return _cyc_mul_obj(a, b, r)


cdef tuple _cyc_mul_obj(tuple a, tuple b, int r):
    cdef list acc = [0] * r
    cdef int i, j, k, n = r - 1
    cdef object ai, bj, top
    for i in range(n):
        ai = a[i]
        if ai:
            for j in range(n):
                bj = b[j]
                if bj:
                    k = i + j
                    if k >= r:
                        k -= r
                    acc[k] = acc[k] + ai * bj
    top = acc[r - 1]
    if top:
        return tuple([acc[i] - top for i in range(n)])
    return tuple(acc[:n])


def cyc_fold(coeffs, int r):
    cdef list acc = [0] * r
    cdef Py_ssize_t e
    cdef object c, top
    for e, c in enumerate(coeffs):
        if c:
            acc[e % r] = acc[e % r] + c
    top = acc[r - 1]
    return tuple([c - top for c in acc[: r - 1]])


def cyc_content(tuple a):
    cdef object g = 0
    cdef object c
    for c in a:
        if c:
            g = gcd(g, c)
            if g == 1:
                return 1
    return g
