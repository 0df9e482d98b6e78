"""Test-only oracles that share no code with the package's reduction routines."""

from hypothesis import strategies as st

from qlattice.arith import CycInt, LaurentPoly, context

PRIMES = (3, 5, 7, 11)


def zeta_vector(terms: dict, r: int) -> tuple:
    """Power-basis coordinates of sum c_e zeta^e: fold e mod r, then use zeta^(r-1) = -(1 + ... + zeta^(r-2))."""
    acc = [0] * r
    for e, c in terms.items():
        acc[e % r] += c
    top = acc[r - 1]
    return tuple(a - top for a in acc[: r - 1])


def zeta_power(k: int, r: int) -> tuple:
    return zeta_vector({k: 1}, r)


def cyc(r: int, *coeffs) -> CycInt:
    c = list(coeffs) + [0] * (r - 1 - len(coeffs))
    return CycInt(context(r), c)


laurent = st.dictionaries(st.integers(-8, 8), st.integers(-30, 30), max_size=6).map(LaurentPoly)


def cycints(r: int, bound: int = 50):
    ctx = context(r)
    return st.lists(st.integers(-bound, bound), min_size=r - 1, max_size=r - 1).map(lambda c: CycInt(ctx, c))
