"""Polynomial families A, B, C, D, E, P, Q and the helpers c, e, with their checks.

Every identity is decided by exact equality in Z[q, q^-1] over a finite,
explicitly recorded parameter range.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import comb

from .arith import (
    CycContext,
    LaurentPoly,
    NotDivisible,
    context,
    divide_exact_h,
    gauss_sum,
    is_unit,
    reduce_at_zeta,
)
from .qcomb import qbinom, qbinom_at_zeta, qbrace, qint, qfactorial, qshifted_brace
from .report import CheckReport

__all__ = [
    "IdentityFamily",
    "FAMILY_ARITY",
    "eval_family",
    "c_helper",
    "e_helper",
    "default_ranges",
    "check_recurrence",
    "check_closed_form",
    "check_printed_Q_recurrence",
    "check_vanishing_D",
    "check_divisibility",
    "check_derivative_links",
    "check_binomial_weight_identities",
    "check_P_at_one",
    "check_pascal",
    "check_inversion_symmetry",
    "check_binomial_inversion",
    "check_gauss_sums",
    "check_bracket_units",
    "run_appendix_suite",
]

SUITE = "appendix"

FAMILY_ARITY = {"A": 3, "B": 1, "C": 2, "D": 2, "E": 4, "P": 3, "Q": 5}


@dataclass(frozen=True)
class IdentityFamily:
    name: str
    params: tuple

    def __post_init__(self):
        if self.name not in FAMILY_ARITY:
            raise ValueError(f"unknown family {self.name!r}")
        if len(self.params) != FAMILY_ARITY[self.name]:
            raise ValueError(f"family {self.name} takes {FAMILY_ARITY[self.name]} parameters")


def _binom(n: int, k: int) -> int:
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


def c_helper(l: int, m: int) -> int:
    return l * (2 * l + m)


def e_helper(l1: int, l2: int, m1: int, m2: int) -> int:
    return c_helper(l1, m1) + c_helper(l2, m2) - 4 * l1 * l2


def _add_into(acc: dict, p: LaurentPoly, shift: int, coef: int) -> None:
    for e, c in p.items():
        k = e + shift
        v = acc.get(k, 0) + coef * c
        if v:
            acc[k] = v
        else:
            acc.pop(k, None)


def _poly(acc: dict) -> LaurentPoly:
    return LaurentPoly._raw({e: c for e, c in acc.items() if c})


# ---------------------------------------------------------------------------
# Defining sums (no domain checks; the public entry point validates)


@lru_cache(maxsize=None)
def A_sum(l: int, m: int, n: int) -> LaurentPoly:
    acc = {}
    for k in range(max(m - l, 0), n + 1):
        p = qbinom(n, k) * qbinom(k + l, m)
        _add_into(acc, p, k * (m - n + 1), (-1) ** k)
    return _poly(acc)


@lru_cache(maxsize=None)
def B_sum(n: int) -> LaurentPoly:
    acc = {}
    for k in range(n + 1):
        _add_into(acc, qbinom(n, k), -k * (n - 5), (-1) ** k)
    return _poly(acc)


@lru_cache(maxsize=None)
def C_sum(m: int, n: int) -> LaurentPoly:
    acc = {}
    for k in range(n + 1):
        _add_into(acc, qbinom(n, k), k * (2 * k + m - n), (-1) ** k)
    return _poly(acc)


@lru_cache(maxsize=None)
def D_sum(m: int, n: int) -> LaurentPoly:
    acc = {}
    for k in range(n + 1):
        inner = C_sum(-4 * k - 2 * m - 1, m).invert_variable()
        _add_into(acc, qbinom(n, k) * inner, -k * (2 * k + 4 * m + n + 1), (-1) ** k)
    return _poly(acc)


@lru_cache(maxsize=None)
def _binom_pair(n1: int, k1: int, n2: int, k2: int) -> LaurentPoly:
    return qbinom(n1, k1) * qbinom(n2, k2)


@lru_cache(maxsize=None)
def E_sum(m1: int, m2: int, n1: int, n2: int) -> LaurentPoly:
    acc = {}
    for k1 in range(n1 + 1):
        for k2 in range(n2 + 1):
            e = 2 * (k1 - k2) ** 2 + k1 * (m1 - n1) + k2 * (m2 - n2)
            _add_into(acc, _binom_pair(n1, k1, n2, k2), e, (-1) ** (k1 + k2))
    return _poly(acc)


@lru_cache(maxsize=None)
def P_sum(l: int, m: int, n: int) -> LaurentPoly:
    acc = {}
    for k in range(n + 1):
        w = c_helper(k, m - n)
        v = (-1) ** k * w ** l * _binom(n, k)
        if v:
            acc[w] = acc.get(w, 0) + v
    return _poly(acc)


@lru_cache(maxsize=None)
def Q_sum(l: int, m1: int, m2: int, n1: int, n2: int) -> LaurentPoly:
    acc = {}
    for k1 in range(n1 + 1):
        for k2 in range(n2 + 1):
            w = e_helper(k1, k2, m1 - n1, m2 - n2)
            v = (-1) ** (k1 + k2) * w ** l * _binom(n1, k1) * _binom(n2, k2)
            if v:
                acc[w] = acc.get(w, 0) + v
    return _poly(acc)


def _domain_error(name, params, why):
    raise ValueError(f"{name}{params}: {why}")


def eval_family(f: IdentityFamily) -> LaurentPoly:
    """Defining sum of family ``f.name`` at ``f.params``."""
    name, p = f.name, f.params
    if name == "A":
        l, m, n = p
        if min(l, m, n) < 0 or m > n + l:
            _domain_error(name, p, "needs l, m, n >= 0 and m <= n + l")
        return A_sum(l, m, n)
    if name == "B":
        if p[0] < 0:
            _domain_error(name, p, "needs n >= 0")
        return B_sum(p[0])
    if name == "C":
        if p[1] < 0:
            _domain_error(name, p, "needs n >= 0")
        return C_sum(*p)
    if name == "D":
        if min(p) < 0:
            _domain_error(name, p, "needs m, n >= 0")
        return D_sum(*p)
    if name == "E":
        if p[2] < 0 or p[3] < 0:
            _domain_error(name, p, "needs n1, n2 >= 0")
        return E_sum(*p)
    if name == "P":
        if p[0] < 0 or p[2] < 0:
            _domain_error(name, p, "needs l, n >= 0")
        return P_sum(*p)
    if p[0] < 0 or p[3] < 0 or p[4] < 0:
        _domain_error(name, p, "needs l, n1, n2 >= 0")
    return Q_sum(*p)


# ---------------------------------------------------------------------------
# Closed forms and recurrences


def A_closed(l, m, n) -> LaurentPoly:
    return qbinom(l, m - n).shift((l + 1) * n) * (-1) ** n


def B_closed(n) -> LaurentPoly:
    return qshifted_brace(2, n).shift(-(n * (n - 5)) // 2) * (-1) ** n


def A_rec_rhs(l, m, n) -> LaurentPoly:
    return A_sum(l, m, n - 1) - A_sum(l + 1, m, n - 1).shift(m - 2 * n + 2)


def B_rec_rhs(n) -> LaurentPoly:
    return (qbrace(n - 3) * B_sum(n - 1)).shift(-n + 3)


def C_rec_rhs(m, n) -> LaurentPoly:
    return C_sum(m + 2, n + 1) + C_sum(m + 4, n).shift(m + 3)


def D_rec_rhs(m, n) -> LaurentPoly:
    one_minus = LaurentPoly({0: 1, -2 * (m + n): -1})
    return one_minus * D_sum(m, n - 1) - D_sum(m + 1, n - 1).shift(-2 * (2 * m + n + 1))


def P_rec_rhs(l, m, n) -> LaurentPoly:
    acc = LaurentPoly()
    for j in range(l):
        w = _binom(l - 1, j) * (m - n + 2) ** (l - j - 1)
        if not w:
            continue
        inner = P_sum(j, m + 2, n - 2) * (2 * (n - 1)) if n >= 2 else LaurentPoly()
        if n >= 1:
            inner = inner - P_sum(j, m + 3, n - 1) * (m + n)
        acc = acc + inner * w
    return acc.shift(m - n + 2) * n


def Q_rec_rhs(l, m1, m2, n1, n2, printed: bool = False) -> LaurentPoly:
    """Right side of the Q recurrence.

    The corrected form carries +2(n-1), -(m+n) in the single-index terms (as for P)
    and 4 n1 n2 in the cross term.  ``printed=True`` uses the opposite signs and
    the factor 2 instead, which is how the recurrence is usually displayed.
    """
    def Qz(j, a, b, c, d):
        return Q_sum(j, a, b, c, d) if c >= 0 and d >= 0 else LaurentPoly()

    s = -1 if printed else 1
    cross = 2 if printed else 4
    acc = LaurentPoly()
    for j in range(l):
        bj = _binom(l - 1, j)
        t1 = (Qz(j, m1 + 2, m2 - 4, n1 - 2, n2) * (2 * (n1 - 1))
              - Qz(j, m1 + 3, m2 - 4, n1 - 1, n2) * (m1 + n1))
        t1 = t1.shift(m1 - n1 + 2) * (s * n1 * (m1 - n1 + 2) ** (l - j - 1))
        t2 = (Qz(j, m1 - 4, m2 + 2, n1, n2 - 2) * (2 * (n2 - 1))
              - Qz(j, m1 - 4, m2 + 3, n1, n2 - 1) * (m2 + n2))
        t2 = t2.shift(m2 - n2 + 2) * (s * n2 * (m2 - n2 + 2) ** (l - j - 1))
        t3 = Qz(j, m1 - 1, m2 - 1, n1 - 1, n2 - 1).shift(m1 + m2 - n1 - n2)
        t3 = t3 * (cross * n1 * n2 * (m1 + m2 - n1 - n2) ** (l - j - 1))
        acc = acc + (t1 + t2 - t3) * bj
    return acc


# ---------------------------------------------------------------------------
# Ranges


def default_ranges(r: int = 5) -> dict:
    """Parameter bounds for every check; single-index families scale as 2r."""
    return {
        "A": 8,
        "B": 12,
        "C_m": 12,
        "C_n": 10,
        "C_div_m": 2 * r,
        "C_div_n": 2 * r,
        "D": r + 2,
        "E_m": 8,
        "E_n": 6,
        "P_m": 2 * r,
        "P_n": 2 * r,
        "Q_m": 8,
        "Q_n": 6,
        "PQ_rec_l": 3,
        "PQ_rec_m": 6,
        "PQ_rec_n": 6,
        "deriv_l": 3,
        "weights": 12,
        "pascal": 12,
    }


def _ranges(ranges, r):
    out = default_ranges(r)
    if ranges:
        out.update(ranges)
    return out


def _first_failure(suite, check, params, items, witness_of):
    """Run (params, ok) pairs; return a fail report for the first false, else pass."""
    count = 0
    for p, ok in items:
        count += 1
        if not ok:
            return CheckReport.failed(suite, check, params, witness_of(p), {"checked": count})
    return CheckReport.passed(suite, check, params, {"checked": count})


def _w(names):
    return lambda p: dict(zip(names, p))


# ---------------------------------------------------------------------------
# Checks


def check_recurrence(name: str, ranges: dict | None = None, r: int = 5) -> CheckReport:
    rg = _ranges(ranges, r)
    check = f"recurrence_{name}"
    if name == "A":
        N = rg["A"]
        items = (((l, m, n), A_sum(l, m, n) == A_rec_rhs(l, m, n))
                 for l in range(N + 1) for n in range(1, N + 1) for m in range(n + l + 1))
        return _first_failure(SUITE, check, {"max": N}, items, _w("lmn"))
    if name == "B":
        N = rg["B"]
        items = (((n,), B_sum(n) == B_rec_rhs(n)) for n in range(1, N + 1))
        return _first_failure(SUITE, check, {"max": N}, items, _w("n"))
    if name == "C":
        M, N = rg["C_m"], rg["C_n"]
        items = (((m, n), C_sum(m, n) == C_rec_rhs(m, n))
                 for m in range(-M, M + 1) for n in range(N + 1))
        return _first_failure(SUITE, check, {"m": M, "n": N}, items, _w("mn"))
    if name == "D":
        N = rg["D"]
        items = (((m, n), D_sum(m, n) == D_rec_rhs(m, n))
                 for m in range(N + 1) for n in range(1, N + 1))
        return _first_failure(SUITE, check, {"max": N}, items, _w("mn"))
    if name == "P":
        L, M, N = rg["PQ_rec_l"], rg["PQ_rec_m"], rg["PQ_rec_n"]
        items = (((l, m, n), P_sum(l, m, n) == P_rec_rhs(l, m, n))
                 for l in range(1, L + 1) for m in range(-M, M + 1) for n in range(N + 1))
        return _first_failure(SUITE, check, {"l": L, "m": M, "n": N}, items, _w("lmn"))
    if name == "Q":
        L, M, N = rg["PQ_rec_l"], min(rg["PQ_rec_m"], 4), min(rg["PQ_rec_n"], 4)
        items = (((l, m1, m2, n1, n2), Q_sum(l, m1, m2, n1, n2) == Q_rec_rhs(l, m1, m2, n1, n2))
                 for l in range(1, L + 1)
                 for m1 in range(-M, M + 1) for m2 in range(-M, M + 1)
                 for n1 in range(N + 1) for n2 in range(N + 1))
        return _first_failure(SUITE, check, {"l": L, "m": M, "n": N}, items,
                              _w(("l", "m1", "m2", "n1", "n2")))
    raise ValueError(f"no recurrence for family {name!r}")


def check_printed_Q_recurrence(r: int = 5) -> CheckReport:
    """The usual display of the Q recurrence (sign and cross factor swapped); warns with a witness."""
    for params in product(range(1, 3), range(-3, 4), range(-3, 4), range(4), range(4)):
        if Q_sum(*params) != Q_rec_rhs(*params, printed=True):
            return CheckReport.warned(
                SUITE, "recurrence_Q_printed_form", {"r": r},
                dict(zip(("l", "m1", "m2", "n1", "n2"), params)),
                {"note": "holds only with +2(n-1), -(m+n) and cross factor 4"})
    return CheckReport.passed(SUITE, "recurrence_Q_printed_form", {"r": r})


def check_closed_form(name: str, ranges: dict | None = None, r: int = 5) -> CheckReport:
    rg = _ranges(ranges, r)
    check = f"closed_form_{name}"
    if name == "A":
        N = rg["A"]
        items = (((l, m, n), A_sum(l, m, n) == A_closed(l, m, n))
                 for l in range(N + 1) for n in range(N + 1) for m in range(n + l + 1))
        return _first_failure(SUITE, check, {"max": N}, items, _w("lmn"))
    if name == "B":
        N = rg["B"]
        items = (((n,), B_sum(n) == B_closed(n)) for n in range(N + 1))
        return _first_failure(SUITE, check, {"max": N}, items, _w("n"))
    raise ValueError(f"no closed form for family {name!r}")


def check_vanishing_D(ctx: CycContext) -> CheckReport:
    """D_{r-m-1, n}(zeta) = 0 for all 0 <= m < n <= r - 1."""
    r = ctx.r
    items = (((m, n), not reduce_at_zeta(D_sum(r - m - 1, n), ctx))
             for n in range(1, r) for m in range(n))
    return _first_failure(SUITE, "vanishing_D", {"r": r}, items, _w("mn"))


def _div_params(name: str, rg: dict):
    if name == "C":
        M, N = rg["C_div_m"], rg["C_div_n"]
        for m in range(-M, M + 1):
            for n in range(N + 1):
                yield (m, n), C_sum(m, n), (n + 1) // 2
    elif name == "D":
        N = rg["D"]
        for m in range(N + 1):
            for n in range(N + 1):
                yield (m, n), D_sum(m, n), (m + n + 1) // 2
    elif name == "E":
        M, N = rg["E_m"], rg["E_n"]
        for m1, m2 in product(range(-M, M + 1), repeat=2):
            for n1, n2 in product(range(N + 1), repeat=2):
                yield (m1, m2, n1, n2), E_sum(m1, m2, n1, n2), (n1 + n2 + 1) // 2
    elif name == "P":
        M, N = rg["P_m"], rg["P_n"]
        for m in range(-M, M + 1):
            for n in range(N + 1):
                yield (m, n), P_sum(0, m, n), (n + 1) // 2
    elif name == "Q":
        M, N = rg["Q_m"], rg["Q_n"]
        for m1, m2 in product(range(-M, M + 1), repeat=2):
            for n1, n2 in product(range(N + 1), repeat=2):
                yield (m1, m2, n1, n2), Q_sum(0, m1, m2, n1, n2), (n1 + n2 + 1) // 2
    else:
        raise ValueError(f"no divisibility statement for family {name!r}")


_DIV_NAMES = {"C": "mn", "D": "mn", "E": ("m1", "m2", "n1", "n2"), "P": "mn",
              "Q": ("m1", "m2", "n1", "n2")}


def check_divisibility(name: str, ranges: dict | None = None, r: int = 5) -> CheckReport:
    """(1 - q)^k divides the family member at the stated exponent k; tightness is reported."""
    if name not in _DIV_NAMES:
        raise ValueError(f"no divisibility statement for family {name!r}")
    rg = _ranges(ranges, r)
    names = _DIV_NAMES[name]
    count = 0
    tight_count = 0
    tight = None
    for params, poly, k in _div_params(name, rg):
        count += 1
        quo = divide_exact_h(poly, k)
        if isinstance(quo, NotDivisible):
            return CheckReport.failed(
                SUITE, f"divisibility_{name}", {"r": r}, {
                    **dict(zip(names, params)), "exponent": k,
                    "failed_stage": quo.stage, "value_at_one": quo.remainder},
                {"checked": count})
        if k > 0 and quo and quo.at_one():
            tight_count += 1
            if tight is None:
                tight = dict(zip(names, params))
    detail = {"checked": count, "tight_count": tight_count, "tight_example": tight}
    if tight is None:
        return CheckReport.warned(SUITE, f"divisibility_{name}", {"r": r},
                                  {"note": "exponent never tight in range"}, detail)
    return CheckReport.passed(SUITE, f"divisibility_{name}", {"r": r}, detail)


def check_derivative_links(name: str, ranges: dict | None = None, r: int = 5) -> CheckReport:
    """d/dq of the l-th member equals q^-1 times the (l+1)-th member."""
    rg = _ranges(ranges, r)
    L = rg["deriv_l"]
    if name == "P":
        M, N = rg["PQ_rec_m"] + 2, rg["PQ_rec_n"] + 2
        items = (((l, m, n), P_sum(l, m, n).derivative() == P_sum(l + 1, m, n).shift(-1))
                 for l in range(L + 1) for m in range(-M, M + 1) for n in range(N + 1))
        return _first_failure(SUITE, "derivative_P", {"l": L, "m": M, "n": N}, items, _w("lmn"))
    if name == "Q":
        M, N = 4, 4
        items = (((l, m1, m2, n1, n2),
                  Q_sum(l, m1, m2, n1, n2).derivative() == Q_sum(l + 1, m1, m2, n1, n2).shift(-1))
                 for l in range(L + 1) for m1 in range(-M, M + 1) for m2 in range(-M, M + 1)
                 for n1 in range(N + 1) for n2 in range(N + 1))
        return _first_failure(SUITE, "derivative_Q", {"l": L, "m": M, "n": N}, items,
                              _w(("l", "m1", "m2", "n1", "n2")))
    raise ValueError(f"no derivative link for family {name!r}")


def _c_binom_rhs(k, n, m):
    return n * (-2 * (n - 1) * _binom(n - 2, k - 1) + (m + n) * _binom(n - 1, k - 1))


def check_binomial_weight_identities(ranges: dict | None = None, r: int = 5) -> list:
    """Integer identities for c and e: shift recurrences and the binomial-weight expansions."""
    rg = _ranges(ranges, r)
    N = rg["weights"]
    reps = []
    items = (((l, m), c_helper(l, m) == c_helper(l - 1, m + 4) + m + 2)
             for l in range(-N, N + 1) for m in range(-N, N + 1))
    reps.append(_first_failure(SUITE, "c_shift", {"max": N}, items, _w("lm")))
    items = (((k, n, m), c_helper(k, m - n) * _binom(n, k) == _c_binom_rhs(k, n, m))
             for n in range(N + 1) for k in range(n + 1) for m in range(-N, N + 1))
    reps.append(_first_failure(SUITE, "c_binom", {"max": N}, items, _w("knm")))

    def e_rec(l1, l2, m1, m2):
        e = e_helper(l1, l2, m1, m2)
        return (e == e_helper(l1 - 1, l2, m1 + 4, m2 - 4) + m1 + 2
                and e == e_helper(l1, l2 - 1, m1 - 4, m2 + 4) + m2 + 2
                and e == e_helper(l1 - 1, l2 - 1, m1, m2) + m1 + m2)

    S = min(N, 6)
    items = (((l1, l2, m1, m2), e_rec(l1, l2, m1, m2))
             for l1, l2, m1, m2 in product(range(-S, S + 1), repeat=4))
    reps.append(_first_failure(SUITE, "e_shift", {"max": S}, items, _w(("l1", "l2", "m1", "m2"))))

    def e_binom(k1, k2, n1, n2, m1, m2, cross=4):
        lhs = e_helper(k1, k2, m1 - n1, m2 - n2) * _binom(n1, k1) * _binom(n2, k2)
        rhs = (_c_binom_rhs(k1, n1, m1) * _binom(n2, k2)
               + _c_binom_rhs(k2, n2, m2) * _binom(n1, k1)
               - cross * n1 * n2 * _binom(n1 - 1, k1 - 1) * _binom(n2 - 1, k2 - 1))
        return lhs == rhs

    T = min(N, 5)
    items = (((k1, k2, n1, n2, m1, m2), e_binom(k1, k2, n1, n2, m1, m2))
             for n1 in range(T + 1) for n2 in range(T + 1)
             for k1 in range(n1 + 1) for k2 in range(n2 + 1)
             for m1 in range(-T, T + 1) for m2 in range(-T, T + 1))
    reps.append(_first_failure(SUITE, "e_binom", {"max": T}, items,
                               _w(("k1", "k2", "n1", "n2", "m1", "m2"))))
    # the cross factor 2 seen in some displays is wrong; -4 l1 l2 in e forces 4
    bad = next(((k1, k2, n1, n2, m1, m2)
                for n1 in range(1, T + 1) for n2 in range(1, T + 1)
                for k1 in range(1, n1 + 1) for k2 in range(1, n2 + 1)
                for m1 in range(-T, T + 1) for m2 in range(-T, T + 1)
                if not e_binom(k1, k2, n1, n2, m1, m2, cross=2)), None)
    if bad is None:
        reps.append(CheckReport.passed(SUITE, "e_binom_cross_factor_2", {"max": T}))
    else:
        reps.append(CheckReport.warned(SUITE, "e_binom_cross_factor_2", {"max": T},
                                       _w(("k1", "k2", "n1", "n2", "m1", "m2"))(bad),
                                       {"note": "identity needs cross factor 4"}))
    items = (((l1, l2, m1, m2), e_helper(l1, l2, m1, m2) == e_helper(l2, l1, m2, m1))
             for l1, l2, m1, m2 in product(range(-S, S + 1), repeat=4))
    reps.append(_first_failure(SUITE, "e_symmetry", {"max": S}, items, _w(("l1", "l2", "m1", "m2"))))
    return reps


def check_P_at_one(ranges: dict | None = None, r: int = 5) -> list:
    rg = _ranges(ranges, r)
    M, N = rg["P_m"], rg["P_n"]
    items = (((i, j), P_sum(0, i, j).at_one() == (1 if j == 0 else 0))
             for i in range(-M, M + 1) for j in range(N + 1))
    rep_p = _first_failure(SUITE, "P_at_one", {"m": M, "n": N}, items, _w("ij"))
    M, N = rg["Q_m"], rg["Q_n"]
    items = (((i1, i2, j1, j2), Q_sum(0, i1, i2, j1, j2).at_one() == (1 if j1 == j2 == 0 else 0))
             for i1, i2 in product(range(-M, M + 1), repeat=2)
             for j1, j2 in product(range(N + 1), repeat=2))
    rep_q = _first_failure(SUITE, "Q_at_one", {"m": M, "n": N}, items, _w(("i1", "i2", "j1", "j2")))
    return [rep_p, rep_q]


# ---------------------------------------------------------------------------
# q-combinatorics checks shared with the qcomb suite


def check_pascal(N: int = 12) -> CheckReport:
    def ok(n, k):
        a = qbinom(n, k)
        return (a == qbinom(n - 1, k).shift(k) + qbinom(n - 1, k - 1).shift(k - n)
                and a == qbinom(n - 1, k).shift(-k) + qbinom(n - 1, k - 1).shift(n - k))

    items = (((n, k), ok(n, k)) for n in range(1, N + 1) for k in range(-1, n + 2))
    return _first_failure("qcomb", "pascal", {"max": N}, items, _w("nk"))


def check_inversion_symmetry(N: int = 12) -> CheckReport:
    def ok(n, k):
        return (qbrace(n).invert_variable() == -qbrace(n)
                and qshifted_brace(n, k).invert_variable() == qshifted_brace(n, k) * (-1) ** max(k, 0)
                and qint(n).invert_variable() == qint(n)
                and qfactorial(k).invert_variable() == qfactorial(k)
                and qbinom(n, k).invert_variable() == qbinom(n, k))

    items = (((n, k), ok(n, k)) for n in range(-N, N + 1) for k in range(0, N + 1))
    return _first_failure("qcomb", "q_inverse_symmetry", {"max": N}, items, _w("nk"))


def check_binomial_inversion(ctx: CycContext) -> CheckReport:
    """[r-m-1 over l] = (-1)^l [l+m over l] at zeta, 0 <= m <= r-1, 0 <= l <= r-m-1."""
    r = ctx.r
    items = (((m, l), qbinom_at_zeta(r - m - 1, l, ctx) == qbinom_at_zeta(l + m, l, ctx) * (-1) ** l)
             for m in range(r) for l in range(r - m))
    return _first_failure("qcomb", "binomial_inversion_at_zeta", {"r": r}, items, _w("ml"))


def check_bracket_units(ctx: CycContext) -> CheckReport:
    from .qcomb import qint_at_zeta

    r = ctx.r
    items = (((n,), is_unit(qint_at_zeta(n, ctx))) for n in range(1, r))
    return _first_failure("qcomb", "bracket_units", {"r": r}, items, _w("n"))


def check_gauss_sums(ctx: CycContext) -> list:
    """Relative closed form, the square identity, and G_n ~ h(zeta)^((r-1)/2)."""
    r = ctx.r
    g0 = gauss_sum(0, ctx)
    items = (((n,), gauss_sum(n, ctx) == ctx.zeta(((r + 1) // 2) * n * n) * g0) for n in range(r))
    rel = _first_failure(SUITE, "gauss_relative", {"r": r}, items, _w("n"))
    sq = CheckReport.from_bool(SUITE, "gauss_square", {"r": r},
                               g0 * g0 == ctx.integer((-1) ** ((r - 1) // 2) * r),
                               {"G0^2": str(g0 * g0)})
    hk = ctx.h_inverse() ** ((r - 1) // 2)

    def unit_quotient(n):
        x = ctx.rat(gauss_sum(n, ctx)) * hk
        return x.is_integral() and is_unit(x)

    items = (((n,), unit_quotient(n)) for n in range(r))
    hq = _first_failure(SUITE, "gauss_h_unit_quotient", {"r": r}, items, _w("n"))
    return [rel, sq, hq]


# ---------------------------------------------------------------------------


def run_appendix_suite(r: int = 5, ranges: dict | None = None, vanishing_primes=(3, 5, 7, 11, 13)) -> list:
    reps = []
    for name in "ABCDPQ":
        reps.append(check_recurrence(name, ranges, r))
    reps.append(check_printed_Q_recurrence(r))
    for name in "AB":
        reps.append(check_closed_form(name, ranges, r))
    for p in vanishing_primes:
        reps.append(check_vanishing_D(context(p)))
    for name in "CDEPQ":
        reps.append(check_divisibility(name, ranges, r))
    reps.append(check_derivative_links("P", ranges, r))
    reps.append(check_derivative_links("Q", ranges, r))
    reps.extend(check_binomial_weight_identities(ranges, r))
    reps.extend(check_P_at_one(ranges, r))
    for p in (3, 5, 7, 11):
        reps.extend(check_gauss_sums(context(p)))
    return reps
