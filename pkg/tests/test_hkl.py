import pytest
from hypothesis import given, strategies as st

from qlattice.arith import context, is_unit
from qlattice.axioms import antipode_leg
from qlattice.hkl import (
    HomologicalIndex,
    adjoint_matrix,
    bar,
    check_adjoint_equivariance,
    check_hkl_integrality,
    check_idempotent_grading,
    check_mcg_relations_hkl,
    check_phi_lattice,
    hkl_generator,
    hkl_inverse,
    iota,
    phi_block,
    phi_coefficient,
    u_basis_transition,
    u_labels,
)
from qlattice.mcg import generators, parse_generator
from qlattice.uqsl2 import (
    AlgebraElement,
    adjoint_action,
    antipode,
    coproduct,
    integral_lambda_rescaled,
    quantum_group,
    ribbon,
    ribbon_inv,
)


def _apply(m, x: AlgebraElement) -> dict:
    """Image of an algebra element under a U_g matrix, keyed by PBW labels."""
    qg = x.qg
    out = {}
    for key, c in x.terms.items():
        j = m.index[tuple(qg.triple(k) for k in key)]
        for i, v in m.cols[j].items():
            lab = m.labels[i]
            out[lab] = out[lab] + c * v if lab in out else c * v
    return {k: v for k, v in out.items() if v}


def _as_labels(qg, terms: dict) -> dict:
    return {tuple(qg.triple(k) for k in key): c for key, c in terms.items() if c}


# -- generators


@pytest.mark.parametrize("r", [3, 5])
def test_tau_alpha_sends_one_to_inverse_ribbon(r):
    ctx = context(r)
    qg = quantum_group(ctx)
    m = hkl_generator("tau_alpha", 1, ctx)
    assert _apply(m, qg.unit()) == _as_labels(qg, ribbon_inv(ctx).terms)


def test_tau_gamma_on_one_tensor_one():
    ctx = context(3)
    qg = quantum_group(ctx)
    m = hkl_generator("tau_gamma1", 2, ctx)
    want = antipode_leg(coproduct(ribbon_inv(ctx)), 0)
    assert _apply(m, qg.unit(2)) == _as_labels(qg, want)


def test_tau_beta_column_matches_the_defining_sum():
    ctx = context(3)
    qg = quantum_group(ctx)
    r = ctx.r
    x = qg.basis_elem(r - 1, 0, r - 1)
    want = qg.zero_elem()
    for (a, b), c in coproduct(ribbon(ctx)).terms.items():
        w = integral_lambda_rescaled(qg.basis_elem(*qg.triple(b)) * x)
        if w:
            want = want + antipode(qg.basis_elem(*qg.triple(a))) * (c * w)
    got = _apply(hkl_generator("tau_beta", 1, ctx), x)
    assert got == _as_labels(qg, want.terms)
    assert got


@pytest.mark.parametrize("name", ["tau_alpha", "tau_gamma1"])
def test_twists_times_inverses_are_identity(name):
    ctx = context(3)
    g = 2 if name == "tau_gamma1" else 1
    assert (hkl_generator(name, g, ctx) @ hkl_inverse(name, g, ctx)).is_identity()


def test_tau_beta_inverse_is_inverse_up_to_a_scalar():
    ctx = context(3)
    prod = hkl_generator("tau_beta", 1, ctx) @ hkl_inverse("tau_beta", 1, ctx)
    assert prod.projectively_equal(hkl_generator("tau_alpha", 1, ctx) @ hkl_inverse("tau_alpha", 1, ctx))


def test_generator_outside_genus_is_rejected():
    with pytest.raises(ValueError):
        hkl_generator("tau_gamma1", 1, context(3))


def test_unknown_basis_is_rejected():
    with pytest.raises(ValueError):
        u_basis_transition("E1F", "E2F", 1, context(3))


# -- basis change


@pytest.mark.parametrize("r", [3, 5])
def test_transition_on_first_two_idempotents(r):
    ctx = context(r)
    t = u_basis_transition("E1primeF", "E1F", 1, ctx)
    index = {lab: i for i, lab in enumerate(t.labels)}
    for l in range(r):
        for n in range(r):
            col0 = {t.labels[i]: v for i, v in t.cols[index[((l, 0, n),)]].items()}
            assert col0 == {((l, 0, n),): ctx.one()}
            col1 = {t.labels[i]: v for i, v in t.cols[index[((l, 1, n),)]].items()}
            assert col1 == {((l, 1, n),): ctx.one(), ((l, 0, n),): -ctx.one()}


@pytest.mark.parametrize("r,g", [(3, 1), (3, 2), (5, 1)])
def test_transition_round_trip(r, g):
    ctx = context(r)
    there = u_basis_transition("E1F", "E1primeF", g, ctx)
    back = u_basis_transition("E1primeF", "E1F", g, ctx)
    assert (back @ there).is_identity() and (there @ back).is_identity()
    assert there.labels == u_labels(r, g)


def test_rescale_uses_the_total_idempotent_index():
    ctx = context(5)
    t = u_basis_transition("E1primeF", "E1F", 1, ctx)
    j = t.index[((0, 2, 0),)]
    # floor(2/2) = 1: the column is h^-1 T_2, and T_2 has leading coefficient 1
    col = t.cols[j]
    assert col[j] == ctx.h_inverse()
    assert all((v * ctx.rat(ctx.h())).is_integral() for v in col.values())
    assert len(col) == 3


# -- integrality, equivariance, relations


def _integrality(r, g):
    ctx = context(r)
    return {str(gen): check_hkl_integrality(gen, g, ctx) for base in generators(g)
            for gen in (base, base.inverse())}


@pytest.mark.parametrize("r,g", [(3, 1), (5, 1), (3, 2)])
def test_hkl_integrality(r, g):
    reps = _integrality(r, g)
    assert all(rep.status != "fail" for rep in reps.values())
    # only the positive tau_beta twists have a non-unit determinant
    warned = sorted(k for k, rep in reps.items() if rep.status == "warn")
    assert warned == sorted(str(b) for b in generators(g) if b.kind == "tau_beta")
    for k in warned:
        assert reps[k].detail["determinant_h_valuation"] > 0
        assert reps[k].detail["unimodular_after_dividing_by_G1"]


def test_tau_alpha_integral_example():
    rep = check_hkl_integrality("tau_alpha", 1, context(3))
    assert rep.status == "pass" and rep.detail["entries_checked"] == 27 * 27


@pytest.mark.parametrize("r", [3, 5])
def test_equivariance_genus_one(r):
    ctx = context(r)
    for gen in generators(1):
        assert check_adjoint_equivariance(gen, 1, ctx).status == "pass"


def test_equivariance_genus_two():
    ctx = context(3)
    for gen in generators(2):
        assert check_adjoint_equivariance(gen, 2, ctx).status == "pass"


def test_left_multiplication_is_not_equivariant():
    # the adjoint check must notice a map that is not a module map
    ctx = context(3)
    qg = quantum_group(ctx)
    from qlattice.hkl import _left_mult

    m = _left_mult(qg, qg.E())
    A = adjoint_matrix(qg.idem(1), 1)
    assert (m @ A).cols != (A @ m).cols


@pytest.mark.parametrize("g", [1, 2])
def test_hkl_relations(g):
    rep = check_mcg_relations_hkl(g, context(3))
    assert rep.status == "pass"


def test_hkl_braid_relation_projectively():
    ctx = context(3)
    a, b = hkl_generator("tau_alpha", 1, ctx), hkl_generator("tau_beta", 1, ctx)
    assert (a @ b @ a).projectively_equal(b @ a @ b)
    assert not (a @ b).projectively_equal(b @ a)


# -- the coefficient map


def test_phi_first_example():
    ctx = context(3)
    c, target = phi_coefficient(HomologicalIndex((0,), (0,), (0,)), ctx)
    assert c == ctx.one()
    assert target == ((2, 0, 0),)


def test_phi_target_reverses_factors():
    ctx = context(5)
    _, target = phi_coefficient(HomologicalIndex((1, 2), (3, 0), (4, 1)), ctx)
    assert target == ((4, 1, 2), (1, 4, 1))


def test_phi_rejects_out_of_range_indices():
    with pytest.raises(ValueError):
        phi_coefficient(HomologicalIndex((3,), (0,), (0,)), context(3))
    with pytest.raises(ValueError):
        HomologicalIndex((0, 0), (0,), (0,))


@given(k=st.lists(st.integers(0, 10), max_size=4), r=st.sampled_from([3, 5, 7, 11]))
def test_bar_and_iota_are_involutions(k, r):
    k = tuple(x % r for x in k)
    assert bar(bar(k)) == k
    assert iota(iota(k, r), r) == k


@st.composite
def _indices(draw):
    r = draw(st.sampled_from([3, 5, 7]))
    g = draw(st.integers(1, 3))
    vec = st.tuples(*[st.integers(0, r - 1)] * g)
    return r, HomologicalIndex(draw(vec), draw(vec), draw(vec))


@given(data=_indices())
def test_phi_scalar_is_a_zeta_power(data):
    r, idx = data
    ctx = context(r)
    c, target = phi_coefficient(idx, ctx)
    assert c in {ctx.zeta_rat(k) for k in range(r)}
    assert is_unit(c)
    assert tuple(t[1] for t in target) == bar(idx.n)


def _graded_by(r, a, b, g):
    ctx = context(r)
    qg = quantum_group(ctx)
    c, target = phi_coefficient(HomologicalIndex(a, b, (0,) * g), ctx)
    y = AlgebraElement(qg, g, {tuple(qg.idx(*t) for t in target): c})
    return [m for m in range(r) if adjoint_action(qg.idem(m), y, g) == y]


def test_grading_examples():
    assert _graded_by(3, (0,), (0,), 1) == [1]
    assert _graded_by(3, (1,), (0,), 1) == [2]
    assert _graded_by(3, (0, 0), (0, 0), 2) == [2]
    assert _graded_by(5, (0, 0), (0, 0), 2) == [2]


@pytest.mark.parametrize("r,g", [(3, 1), (5, 1), (3, 2)])
def test_grading_suite(r, g):
    rep = check_idempotent_grading(g, context(r))
    assert rep.status == "pass"
    assert rep.detail["checked"] == r ** (3 * g) * r


@pytest.mark.parametrize("r,g", [(3, 1), (5, 1), (3, 2)])
def test_phi_lattice(r, g):
    rep = check_phi_lattice(g, context(r))
    assert rep.status == "pass"
    assert rep.detail["blocks"] == r ** (2 * g)


def test_phi_blocks_are_unimodular_but_not_diagonal():
    ctx = context(5)
    B = phi_block((1,), (2,), ctx)
    assert B.is_integral() and B.inverse().is_integral()
    assert not check_phi_lattice(1, ctx).detail["diagonal_zeta_power_rescale"]
