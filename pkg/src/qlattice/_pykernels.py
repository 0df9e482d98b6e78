"""Pure-Python arithmetic kernels for Z[zeta], zeta a primitive r-th root of unity.

Elements are tuples of r-1 ints, the coordinates in the power basis
1, zeta, ..., zeta^(r-2).  The compiled module ``_ckernels`` exports the
same functions with the same signatures.
"""

from math import gcd


def cyc_mul(a, b, r):
    """Product of two power-basis tuples, reduced modulo 1 + x + ... + x^(r-1)."""
    if len(a) != r - 1 or len(b) != r - 1:
        raise ValueError(f"expected coordinate tuples of length {r - 1}")
    acc = [0] * r
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    k = i + j
                    if k >= r:
                        k -= r
                    acc[k] += ai * bj
    top = acc[r - 1]
    if top:
        return tuple(c - top for c in acc[: r - 1])
    return tuple(acc[: r - 1])


def cyc_fold(coeffs, r):
    """Reduce an arbitrary coefficient list (index = exponent, any length) to the power basis."""
    acc = [0] * r
    for e, c in enumerate(coeffs):
        if c:
            acc[e % r] += c
    top = acc[r - 1]
    return tuple(c - top for c in acc[: r - 1])


def cyc_content(a):
    g = 0
    for c in a:
        if c:
            g = gcd(g, c)
            if g == 1:
                return 1
    return g
