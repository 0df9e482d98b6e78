"""Quantum integers, factorials and Gaussian binomials in Z[q, q^-1] and at zeta.

Conventions: {n} = q^n - q^-n, {n;k} = prod_{j=1..k} {n-k+j}, [n] = {n}/{1},
and both {n;k} and the binomial [k over l] vanish when k < 0, l < 0 or k < l.
"""

from __future__ import annotations

from functools import lru_cache

from .arith import CycContext, CycInt, LaurentPoly, reduce_at_zeta

__all__ = [
    "qbrace",
    "qshifted_brace",
    "qbrace_factorial",
    "qint",
    "qfactorial",
    "qbracket",
    "qbracket_factorial",
    "qbinom",
    "qbinom_at_zeta",
    "qint_at_zeta",
    "qfactorial_at_zeta",
    "qshifted_brace_at_zeta",
]


@lru_cache(maxsize=None)
def qbrace(n: int) -> LaurentPoly:
    return LaurentPoly({n: 1, -n: -1}) if n else LaurentPoly()


@lru_cache(maxsize=None)
def qshifted_brace(n: int, k: int) -> LaurentPoly:
    if k < 0:
        return LaurentPoly()
    out = LaurentPoly.const(1)
    for j in range(1, k + 1):
        out = out * qbrace(n - k + j)
        if not out:
            break
    return out


def qbrace_factorial(k: int) -> LaurentPoly:
    return qshifted_brace(k, k)


@lru_cache(maxsize=None)
def qint(n: int) -> LaurentPoly:
    """[n] = (q^n - q^-n) / (q - q^-1) = q^(n-1) + q^(n-3) + ... + q^(1-n)."""
    return qbrace(n).exact_div(qbrace(1))


@lru_cache(maxsize=None)
def qfactorial(k: int) -> LaurentPoly:
    if k < 0:
        return LaurentPoly()
    out = LaurentPoly.const(1)
    for j in range(1, k + 1):
        out = out * qint(j)
    return out


qbracket = qint
qbracket_factorial = qfactorial


@lru_cache(maxsize=None)
def qbinom(k: int, l: int) -> LaurentPoly:
    """Gaussian binomial via {k}! / ({l}! {k-l}!), the powers of {1} cancelling."""
    if k < 0 or l < 0 or k < l:
        return LaurentPoly()
    if l == 0 or l == k:
        return LaurentPoly.const(1)
    return qbrace_factorial(k).exact_div(qbrace_factorial(l) * qbrace_factorial(k - l))


# Values at zeta.  The caches are keyed by r so concurrent readers share them.


@lru_cache(maxsize=None)
def _binom_at(k: int, l: int, r: int) -> tuple:
    from .arith import context

    return reduce_at_zeta(qbinom(k, l), context(r)).c


def qbinom_at_zeta(k: int, l: int, ctx: CycContext) -> CycInt:
    return CycInt._raw(ctx, _binom_at(k, l, ctx.r))


def qint_at_zeta(n: int, ctx: CycContext) -> CycInt:
    return reduce_at_zeta(qint(n), ctx)


def qfactorial_at_zeta(k: int, ctx: CycContext) -> CycInt:
    return reduce_at_zeta(qfactorial(k), ctx)


def qshifted_brace_at_zeta(n: int, k: int, ctx: CycContext) -> CycInt:
    return reduce_at_zeta(qshifted_brace(n, k), ctx)
