"""Hopf, quasi-triangular, ribbon and integral axioms of u_zeta(sl2), checked on the PBW basis."""

from __future__ import annotations

import random

from .arith import CycContext
from .oracle import oracle_product
from .report import CheckReport
from .uqsl2 import (
    AlgebraElement,
    _acc,
    antipode,
    cointegral_rescaled,
    coproduct,
    counit,
    counit_leg,
    drinfeld_check,
    integral_lambda_rescaled,
    lambda_leg,
    quantum_group,
    r_matrix,
    r_matrix_alt,
    ribbon,
    ribbon_inv,
)

__all__ = [
    "check_coassociativity",
    "check_counit",
    "check_antipode",
    "check_bialgebra",
    "check_associativity",
    "check_structure_integrality",
    "check_pbw_oracle",
    "check_quasitriangular",
    "check_ribbon",
    "check_integral",
    "check_cointegral",
    "run_hopf_suite",
    "run_ribbon_suite",
    "run_integral_suite",
    "run_factorizability_suite",
]


def _mu(x: AlgebraElement) -> AlgebraElement:
    """Multiply the two legs of a degree-2 element."""
    qg = x.qg
    out = {}
    for (i, j), c in x.terms.items():
        for k, ck in qg.mul_basis(i, j).items():
            _acc(out, (k,), c * ck)
    return AlgebraElement._raw(qg, 1, out)


def _witness(x_triple, lhs: AlgebraElement, rhs: AlgebraElement) -> dict:
    diff = lhs - rhs
    tr, c = min(diff.items_triples(), key=lambda t: t[0])
    return {"basis_element": list(x_triple), "index": [list(t) for t in tr], "difference": str(c)}


def _triples(qg) -> list:
    return [qg.triple(i) for i in range(qg.dim)]


def _over_basis(suite, check, ctx, law) -> CheckReport:
    """``law(x)`` returns (lhs, rhs) for a basis element x; the first mismatch becomes the witness."""
    qg = quantum_group(ctx)
    params = {"r": qg.r}
    count = 0
    for (l, m, n) in _triples(qg):
        lhs, rhs = law(qg.basis_elem(l, m, n))
        count += 1
        if lhs != rhs:
            return CheckReport.failed(suite, check, params, _witness((l, m, n), lhs, rhs))
    return CheckReport.passed(suite, check, params, {"basis_elements": count})


def check_coassociativity(ctx: CycContext) -> CheckReport:
    def law(x):
        d = coproduct(x)
        return coproduct(d, 0), coproduct(d, 1)
    return _over_basis("hopf", "coassociativity", ctx, law)


def check_counit(ctx: CycContext) -> CheckReport:
    def law(x):
        d = coproduct(x)
        return counit_leg(d, 0) + counit_leg(d, 1), x * 2
    return _over_basis("hopf", "counit", ctx, law)


def check_antipode(ctx: CycContext) -> list:
    """mu(S x id)Delta = eta epsilon = mu(id x S)Delta, as two checks."""
    qg = quantum_group(ctx)
    out = []
    for leg, name in ((0, "antipode_left"), (1, "antipode_right")):
        def law(x, leg=leg):
            d = coproduct(x)
            return _mu(AlgebraElement._raw(qg, 2, antipode_leg(d, leg))), qg.unit() * counit(x)
        out.append(_over_basis("hopf", name, ctx, law))
    return out


def antipode_leg(x: AlgebraElement, leg: int) -> dict:
    qg = x.qg
    out = {}
    for k, c in x.terms.items():
        for (s,), cs in qg.antipode_basis(k[leg]).items():
            _acc(out, k[:leg] + (s,) + k[leg + 1:], c * cs)
    return out


def _pairs(qg, samples: int | None, seed: int):
    basis = _triples(qg)
    if samples is None or samples >= len(basis) ** 2:
        return [(a, b) for a in basis for b in basis]
    rng = random.Random(seed)
    return [(rng.choice(basis), rng.choice(basis)) for _ in range(samples)]


def check_bialgebra(ctx: CycContext, samples: int | None = 400, seed: int = 0) -> CheckReport:
    """Delta(ab) = Delta(a) Delta(b) on basis pairs (all pairs when ``samples`` is None)."""
    qg = quantum_group(ctx)
    params = {"r": qg.r}
    pairs = _pairs(qg, samples, seed)
    for a, b in pairs:
        xa, xb = qg.basis_elem(*a), qg.basis_elem(*b)
        lhs, rhs = coproduct(xa * xb), coproduct(xa) * coproduct(xb)
        if lhs != rhs:
            w = _witness(a, lhs, rhs)
            w["second_element"] = list(b)
            return CheckReport.failed("hopf", "bialgebra", params, w)
    return CheckReport.passed("hopf", "bialgebra", params, {"pairs": len(pairs), "seed": seed})


def check_associativity(ctx: CycContext, samples: int | None = 300, seed: int = 1) -> CheckReport:
    qg = quantum_group(ctx)
    params = {"r": qg.r}
    basis = _triples(qg)
    rng = random.Random(seed)
    n = samples or len(basis) ** 2
    for _ in range(n):
        ta, tb, tc = (rng.choice(basis) for _ in range(3))
        a, b, c = qg.basis_elem(*ta), qg.basis_elem(*tb), qg.basis_elem(*tc)
        lhs, rhs = (a * b) * c, a * (b * c)
        if lhs != rhs:
            w = _witness(ta, lhs, rhs)
            w["second_element"], w["third_element"] = list(tb), list(tc)
            return CheckReport.failed("hopf", "associativity", params, w)
    return CheckReport.passed("hopf", "associativity", params, {"triples": n, "seed": seed})


def check_structure_integrality(ctx: CycContext) -> CheckReport:
    """Every structure constant of multiply, coproduct and antipode on the basis lies in Z[zeta]."""
    qg = quantum_group(ctx)
    params = {"r": qg.r}
    n = qg.dim
    for i in range(n):
        for name, table in (("coproduct", qg.coproduct_basis(i)), ("antipode", qg.antipode_basis(i))):
            for k, c in table.items():
                if c.den != 1:
                    return CheckReport.failed("hopf", "structure_integrality", params, {
                        "operation": name, "input": list(qg.triple(i)),
                        "output": [list(qg.triple(j)) for j in k], "value": str(c)})
        for j in range(n):
            for k, c in qg.mul_basis(i, j).items():
                if c.den != 1:
                    return CheckReport.failed("hopf", "structure_integrality", params, {
                        "operation": "multiply", "input": [list(qg.triple(i)), list(qg.triple(j))],
                        "output": list(qg.triple(k)), "value": str(c)})
    return CheckReport.passed("hopf", "structure_integrality", params)


def check_pbw_oracle(ctx: CycContext, samples: int | None = None, seed: int = 2) -> CheckReport:
    """PBW products of random basis pairs agree with the word-rewriting oracle.

    The oracle's cost grows quickly with r, so the default sample is 500 pairs at
    r = 3 and 40 pairs above.
    """
    qg = quantum_group(ctx)
    if samples is None:
        samples = 500 if qg.r == 3 else 40
    params = {"r": qg.r}
    for a, b in _pairs(qg, samples, seed):
        got = {qg.triple(k): c for (k,), c in (qg.basis_elem(*a) * qg.basis_elem(*b)).terms.items()}
        want = oracle_product({a: qg.one_c}, {b: qg.one_c}, ctx)
        if got != want:
            key = min(set(got) ^ set(want) or {k for k in got if got[k] != want[k]})
            return CheckReport.failed("hopf", "pbw_oracle", params, {
                "first_element": list(a), "second_element": list(b), "index": list(key),
                "pbw": str(got.get(key, ctx.zero())), "oracle": str(want.get(key, ctx.zero()))})
    return CheckReport.passed("hopf", "pbw_oracle", params, {"pairs": samples, "seed": seed})


def check_quasitriangular(ctx: CycContext) -> list:
    qg = quantum_group(ctx)
    params = {"r": qg.r}
    R = r_matrix(ctx)
    out = []

    def law(x):
        d = coproduct(x)
        return R * d, d.permute((1, 0)) * R
    out.append(_over_basis("ribbon", "R_intertwines_coproduct", ctx, law))

    R13 = R.embed(3, (0, 2))
    R23 = R.embed(3, (1, 2))
    R12 = R.embed(3, (0, 1))
    out.append(CheckReport.from_bool("ribbon", "R_hexagon_left", params,
                                     coproduct(R, 0) == R13 * R23,
                                     {"note": "(Delta x id)R != R13 R23"}))
    out.append(CheckReport.from_bool("ribbon", "R_hexagon_right", params,
                                     coproduct(R, 1) == R13 * R12,
                                     {"note": "(id x Delta)R != R13 R12"}))
    out.append(CheckReport.from_bool("ribbon", "R_two_forms_agree", params,
                                     R == r_matrix_alt(ctx),
                                     {"note": "the two expansions of R differ"}))
    return out


def check_ribbon(ctx: CycContext) -> list:
    qg = quantum_group(ctx)
    params = {"r": qg.r}
    th, thi = ribbon(ctx), ribbon_inv(ctx)
    one = qg.unit()
    out = [_over_basis("ribbon", "theta_central", ctx, lambda x: (th * x, x * th))]
    for name, lhs in (("theta_times_inverse", th * thi), ("inverse_times_theta", thi * th)):
        w = None if lhs == one else _witness((0, 0, 0), lhs, one)
        out.append(CheckReport.from_bool("ribbon", name, params, lhs == one, w))
    s = antipode(th)
    out.append(CheckReport.from_bool("ribbon", "theta_antipode_fixed", params, s == th,
                                     None if s == th else _witness((0, 0, 0), s, th)))
    out.append(CheckReport.from_bool("ribbon", "theta_counit", params, counit(th) == qg.one_c,
                                     {"counit": str(counit(th))}))
    return out


def check_integral(ctx: CycContext) -> CheckReport:
    """lambda'(x_(2)) x_(1) = lambda'(x) 1 for every basis x."""
    qg = quantum_group(ctx)

    def law(x):
        return lambda_leg(coproduct(x), 1), qg.unit() * integral_lambda_rescaled(x)
    return _over_basis("integral", "left_integral", ctx, law)


def check_cointegral(ctx: CycContext) -> list:
    """x Lambda' = epsilon(x) Lambda' = Lambda' x, and lambda'(Lambda') = 1."""
    qg = quantum_group(ctx)
    L = cointegral_rescaled(ctx)
    out = [
        _over_basis("integral", "cointegral_left", ctx, lambda x: (x * L, L * counit(x))),
        _over_basis("integral", "cointegral_right", ctx, lambda x: (L * x, L * counit(x))),
    ]
    v = integral_lambda_rescaled(L)
    out.append(CheckReport.from_bool("integral", "lambda_of_cointegral", {"r": qg.r},
                                     v == qg.one_c, {"value": str(v)}))
    return out


def run_hopf_suite(ctx: CycContext) -> list:
    return [
        check_associativity(ctx),
        check_coassociativity(ctx),
        check_counit(ctx),
        *check_antipode(ctx),
        check_bialgebra(ctx),
        check_structure_integrality(ctx),
        check_pbw_oracle(ctx),
    ]


def run_ribbon_suite(ctx: CycContext) -> list:
    return check_quasitriangular(ctx) + check_ribbon(ctx)


def run_integral_suite(ctx: CycContext) -> list:
    return [check_integral(ctx)] + check_cointegral(ctx)


def run_factorizability_suite(ctx: CycContext) -> list:
    return [drinfeld_check(ctx)]
