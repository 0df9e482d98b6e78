import pytest
from hypothesis import given, strategies as st

from qlattice.arith import (
    CycContext,
    CycInt,
    CycRat,
    LaurentPoly,
    NotDivisible,
    context,
    cyc_inverse,
    divide_exact_h,
    divide_exact_h_zeta,
    gauss_sum,
    h_valuation,
    is_integral,
    is_unit,
    reduce_at_zeta,
)
from qlattice.qcomb import qint

from helpers import PRIMES, cyc, cycints, laurent, zeta_power, zeta_vector

q = LaurentPoly.monomial


# -- contexts


@pytest.mark.parametrize("r", [0, 1, 2, 4, 9, 15, -3])
def test_context_rejects_non_odd_primes(r):
    with pytest.raises(ValueError):
        CycContext(r)


def test_context_is_shared():
    assert context(5) is context(5)


# -- reduce_at_zeta


def test_reduce_square_at_three():
    assert reduce_at_zeta(q(2), context(3)) == cyc(3, -1, -1)


@pytest.mark.parametrize("r", PRIMES)
def test_cyclotomic_polynomial_vanishes(r):
    assert not reduce_at_zeta(LaurentPoly({e: 1 for e in range(r)}), context(r))


def test_reduce_negative_power():
    assert reduce_at_zeta(q(-1), context(5)) == cyc(5, -1, -1, -1, -1)


@pytest.mark.parametrize("r", PRIMES)
@given(p=laurent)
def test_reduce_matches_folding_oracle(r, p):
    assert reduce_at_zeta(p, context(r)).c == zeta_vector(p.coeffs, r)


@pytest.mark.parametrize("r", [3, 5, 7])
@given(p=laurent, s=laurent)
def test_reduce_is_multiplicative(r, p, s):
    ctx = context(r)
    assert reduce_at_zeta(p * s, ctx) == reduce_at_zeta(p, ctx) * reduce_at_zeta(s, ctx)


# -- ring laws


@given(a=laurent, b=laurent, c=laurent)
def test_laurent_ring_laws(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a + LaurentPoly() == a
    assert a * LaurentPoly.const(1) == a
    assert a - a == LaurentPoly()


@given(p=laurent)
def test_laurent_canonical_form_has_no_zero_coefficients(p):
    assert all(p.coeffs.values())


@pytest.mark.parametrize("r", [3, 5, 7])
@given(data=st.data())
def test_cyc_ring_laws(r, data):
    a, b, c = (data.draw(cycints(r)) for _ in range(3))
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    ctx = context(r)
    x = ctx.rat(a)
    if x:
        assert x * cyc_inverse(x) == ctx.one()


@pytest.mark.parametrize("r", [3, 5, 7])
@given(data=st.data())
def test_cycrat_is_reduced(r, data):
    from math import gcd

    a = data.draw(cycints(r))
    d = data.draw(st.integers(1, 60))
    x = CycRat(context(r), a.c, d)
    assert x.den >= 1
    g = 0
    for c in x.num:
        g = gcd(g, c)
    assert gcd(g, x.den) == 1 or not x


# -- inverse, integrality, units


def test_inverse_of_one_and_zeta():
    assert cyc_inverse(context(3).one()) == context(3).one()
    ctx = context(5)
    assert cyc_inverse(ctx.zeta(1)) == ctx.zeta(4)


def test_inverse_of_h_at_three():
    inv = cyc_inverse(context(3).h())
    assert inv == CycRat(context(3), (2, 1), 3)


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        cyc_inverse(context(3).zero())


def test_is_integral_examples():
    ctx = context(5)
    assert is_integral(ctx.zeta(1) + 3)
    assert not is_integral(ctx.rat(1) / 5)
    c3 = context(3)
    assert is_integral(c3.rat(gauss_sum(1, c3)) * c3.h_inverse())


def test_mixing_contexts_is_rejected():
    with pytest.raises(ValueError):
        context(5).rat(gauss_sum(1, context(3)))
    from qlattice.kernels import cyc_mul

    with pytest.raises(ValueError):
        cyc_mul((1, 2), (1, 2, 3, 4), 5)


def test_is_unit_examples():
    ctx = context(5)
    assert is_unit(-ctx.zeta(2))
    assert not is_unit(ctx.h())
    assert is_unit(ctx.zeta(1) + ctx.zeta(-1))


@pytest.mark.parametrize("r", PRIMES)
def test_h_is_not_a_unit_and_h_power_matches_r(r):
    ctx = context(r)
    assert not is_unit(ctx.h())
    assert h_valuation(ctx.integer(r)) == r - 1
    assert is_unit(divide_exact_h_zeta(ctx.integer(r), r - 1))


# -- Gauss sums


def test_gauss_sums_at_three():
    ctx = context(3)
    assert gauss_sum(0, ctx) == cyc(3, 1, 2)
    # 2 + zeta^2 = 1 - zeta
    assert gauss_sum(1, ctx) == cyc(3, 1, -1)


@pytest.mark.parametrize("r", PRIMES)
def test_gauss_sum_matches_direct_sum(r):
    for n in range(r):
        terms = {}
        for l in range(r):
            e = -2 * l * (l - n)
            terms[e] = terms.get(e, 0) + 1
        assert gauss_sum(n, context(r)).c == zeta_vector(terms, r)


@pytest.mark.parametrize("r", PRIMES)
def test_gauss_sum_relative_form_and_square(r):
    ctx = context(r)
    g0 = gauss_sum(0, ctx)
    for n in range(r):
        assert gauss_sum(n, ctx) == ctx.zeta(((r + 1) // 2) * n * n) * g0
    assert g0 * g0 == ctx.integer((-1) ** ((r - 1) // 2) * r)


@pytest.mark.parametrize("r", PRIMES)
def test_gauss_sum_is_a_unit_times_h_power(r):
    ctx = context(r)
    for n in range(r):
        x = divide_exact_h_zeta(gauss_sum(n, ctx), (r - 1) // 2)
        assert is_integral(x) and is_unit(x)
        assert h_valuation(gauss_sum(n, ctx)) == (r - 1) // 2


# -- division by (1 - q)^k


def test_divide_exact_h_examples():
    p = LaurentPoly({0: 1, 2: -1})
    assert divide_exact_h(p, 1) == LaurentPoly({0: 1, 1: 1})
    res = divide_exact_h(p, 2)
    assert isinstance(res, NotDivisible) and not res
    assert res.stage == 2 and res.remainder == 2


def test_divide_exact_h_of_zero_and_k_zero():
    assert divide_exact_h(LaurentPoly(), 5) == LaurentPoly()
    p = LaurentPoly({3: 4})
    assert divide_exact_h(p, 0) == p
    with pytest.raises(ValueError):
        divide_exact_h(p, -1)


@given(p=laurent, k=st.integers(0, 4))
def test_divide_exact_h_roundtrip(p, k):
    h = LaurentPoly({0: 1, 1: -1})
    prod = p * h ** k
    assert divide_exact_h(prod, k) == p
    res = divide_exact_h(p, k)
    if not isinstance(res, NotDivisible):
        assert res * h ** k == p


@pytest.mark.parametrize("r", [3, 5, 7])
def test_divide_h_zeta_examples(r):
    ctx = context(r)
    assert divide_exact_h_zeta(ctx.h(), 1) == ctx.one()
    assert is_unit(divide_exact_h_zeta(ctx.rat(reduce_at_zeta(qint(2), ctx)), 0))


@pytest.mark.parametrize("r", [3, 5, 7])
@given(data=st.data())
def test_h_valuation_is_additive(r, data):
    ctx = context(r)
    a = data.draw(cycints(r, 10))
    b = data.draw(cycints(r, 10))
    if a and b:
        assert h_valuation(a * b) == h_valuation(a) + h_valuation(b)


def test_galois_conjugation_is_a_ring_map():
    ctx = context(7)
    a, b = cyc(7, 1, 2, 0, -1), cyc(7, 0, 3, 1)
    for k in range(1, 7):
        assert (a * b).conjugate(k) == a.conjugate(k) * b.conjugate(k)
    assert ctx.zeta(1).conjugate(3) == ctx.zeta(3)


def test_string_rendering_is_exact():
    ctx = context(3)
    s = str(cyc_inverse(ctx.h()))
    assert "/3" in s and "." not in s
    assert zeta_power(3, 3) == (1, 0)
    assert isinstance(ctx.zeta(1), CycInt)
